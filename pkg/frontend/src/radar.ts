// SVG radar chart over the six factor axes, radial range fixed to [0,1].

const SVG_NS = "http://www.w3.org/2000/svg";

export const RADAR_COLORS = [
  "#2563eb",
  "#dc2626",
  "#059669",
  "#d97706",
  "#7c3aed",
  "#0891b2",
] as const;

export interface RadarSeries {
  id: string;
  name: string;
  points: readonly number[];
}

function svgEl(tag: string, attrs: Record<string, string>): SVGElement {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [name, value] of Object.entries(attrs)) {
    node.setAttribute(name, value);
  }
  return node;
}

function vertex(center: number, radius: number, axis: number, total: number): [number, number] {
  // Axis 0 points straight up; the rest proceed clockwise.
  const angle = -Math.PI / 2 + (2 * Math.PI * axis) / total;
  return [center + radius * Math.cos(angle), center + radius * Math.sin(angle)];
}

export function radarSvg(
  labels: readonly string[],
  series: readonly RadarSeries[],
  size = 340,
): SVGSVGElement {
  const svg = svgEl("svg", {
    viewBox: `0 0 ${size} ${size}`,
    class: "radar",
    role: "img",
  }) as SVGSVGElement;
  const center = size / 2;
  const radius = size * 0.36;
  const axes = labels.length;

  for (const ring of [0.25, 0.5, 0.75, 1.0]) {
    const points = labels
      .map((_, axis) => vertex(center, radius * ring, axis, axes).join(","))
      .join(" ");
    svg.appendChild(svgEl("polygon", { points, class: "radar-ring" }));
  }

  labels.forEach((label, axis) => {
    const [x, y] = vertex(center, radius, axis, axes);
    svg.appendChild(
      svgEl("line", { x1: String(center), y1: String(center), x2: String(x), y2: String(y), class: "radar-axis" }),
    );
    const [lx, ly] = vertex(center, radius * 1.14, axis, axes);
    const text = svgEl("text", {
      x: String(lx),
      y: String(ly),
      class: "radar-label",
      "text-anchor": "middle",
    });
    text.textContent = label;
    svg.appendChild(text);
  });

  series.forEach((row, index) => {
    const color = RADAR_COLORS[index % RADAR_COLORS.length];
    const points = row.points
      .map((value, axis) => {
        const bounded = Math.min(1, Math.max(0, value));
        return vertex(center, radius * bounded, axis, axes).join(",");
      })
      .join(" ");
    svg.appendChild(
      svgEl("polygon", {
        points,
        class: "radar-series",
        "data-id": row.id,
        stroke: color,
        fill: color,
        "fill-opacity": "0.12",
      }),
    );
  });

  return svg;
}
