// Tiny DOM construction helpers; the app renders without a framework.

type Child = Node | string | null | undefined;

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  ...children: Child[]
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [name, value] of Object.entries(attrs)) {
    node.setAttribute(name, value);
  }
  append(node, ...children);
  return node;
}

export function append(parent: Node, ...children: Child[]): void {
  for (const child of children) {
    if (child === null || child === undefined) continue;
    parent.appendChild(typeof child === "string" ? document.createTextNode(child) : child);
  }
}

export function clear(node: Node): void {
  while (node.firstChild) node.removeChild(node.firstChild);
}

export function option(value: string, label = value): HTMLOptionElement {
  return el("option", { value }, label);
}

export function labeled(text: string, control: Node): HTMLLabelElement {
  return el("label", {}, el("span", { class: "field-name" }, text), control);
}

export function checkboxGroup(
  name: string,
  values: readonly string[],
  checked: readonly string[],
  onChange: (selected: string[]) => void,
): HTMLElement {
  const group = el("div", { class: "checkbox-group", "data-name": name });
  for (const value of values) {
    const box = el("input", { type: "checkbox", value }) as HTMLInputElement;
    box.checked = checked.includes(value);
    box.addEventListener("change", () => {
      const selected: string[] = [];
      group.querySelectorAll<HTMLInputElement>("input:checked").forEach((input) => {
        selected.push(input.value);
      });
      onChange(selected);
    });
    append(group, el("label", { class: "checkbox" }, box, value));
  }
  return group;
}

export function errorBox(message: string, violations: readonly string[] = []): HTMLElement {
  const box = el("div", { class: "error", role: "alert" }, message);
  if (violations.length) {
    const list = el("ul", { class: "violations" });
    for (const violation of violations) append(list, el("li", {}, violation));
    append(box, list);
  }
  return box;
}
