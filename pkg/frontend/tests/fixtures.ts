// Canned service responses captured from the bundled catalog.
// Each constant notes the request that produced it; regenerate by replaying.

// GET /api/meta
export const metaResponse = {
  "catalog_version": 1,
  "factors": [
    "threat_model",
    "privacy",
    "published_accuracy",
    "verifiable_results",
    "open_source",
    "training_support"
  ],
  "ui_scale_bound": 10,
  "vocabularies": {
    "datasets": [
      "AGNews",
      "CIFAR-10",
      "IMDB",
      "ImageNet",
      "MNIST"
    ],
    "ml_models": [
      "CNN",
      "DNN",
      "Linear Regression",
      "Logistic Regression",
      "fastText"
    ],
    "libraries": [
      "HEAAN",
      "HElib",
      "PyTorch",
      "SEAL"
    ],
    "schemes": [
      "BGV",
      "CKKS",
      "Garbled Circuits",
      "Secret Sharing"
    ],
    "nonlinear_functions": [
      "ArgMax",
      "Avgpool",
      "Maxpool",
      "Polynomial approximation",
      "ReLU",
      "Sigmoid",
      "Softmax",
      "Square"
    ]
  }
};

// POST /api/rank {query: {ml_models: [CNN], threat_models: [semi-honest], open_source: true}, ui_weights: [5,5,5,5,5,5]}
export const cnnShortlistEvenWeights = {
  "catalog_version": 1,
  "weights_used": [
    0.5,
    0.5,
    0.5,
    0.5,
    0.5,
    0.5
  ],
  "ranking": [
    {
      "id": "aby3",
      "score": 2.9954869120449303,
      "factor_vector": {
        "threat_model": 1.0,
        "privacy": 1.0,
        "published_accuracy": 0.9909738240898606,
        "verifiable_results": 1.0,
        "open_source": 1.0,
        "training_support": 1.0
      }
    },
    {
      "id": "pyhenet",
      "score": 2.875,
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 1.0,
        "verifiable_results": 1.0,
        "open_source": 1.0,
        "training_support": 1.0
      }
    },
    {
      "id": "cryptflow",
      "score": 2.74448400361047,
      "factor_vector": {
        "threat_model": 1.0,
        "privacy": 1.0,
        "published_accuracy": 0.9889680072209407,
        "verifiable_results": 1.0,
        "open_source": 1.0,
        "training_support": 0.5
      }
    },
    {
      "id": "cryptodl",
      "score": 2.62399709156554,
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 0.9979941831310801,
        "verifiable_results": 1.0,
        "open_source": 1.0,
        "training_support": 0.5
      }
    },
    {
      "id": "lowmemory20",
      "score": 2.611510881556514,
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 0.9730217631130278,
        "verifiable_results": 1.0,
        "open_source": 1.0,
        "training_support": 0.5
      }
    },
    {
      "id": "pysyft",
      "score": 2.375,
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 0.0,
        "verifiable_results": 1.0,
        "open_source": 1.0,
        "training_support": 1.0
      }
    }
  ]
};

// POST /api/rank {query: {technique: HE}, filters: {technique_specific: {bootstrapping: "true"}}, ui_weights: [5,5,5,5,5,5]}
export const heBootstrapEvenWeights = {
  "catalog_version": 1,
  "weights_used": [
    0.5,
    0.5,
    0.5,
    0.5,
    0.5,
    0.5
  ],
  "ranking": [
    {
      "id": "cryptodl",
      "score": 2.62399709156554,
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 0.9979941831310801,
        "verifiable_results": 1.0,
        "open_source": 1.0,
        "training_support": 0.5
      }
    },
    {
      "id": "lowmemory20",
      "score": 2.611510881556514,
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 0.9730217631130278,
        "verifiable_results": 1.0,
        "open_source": 1.0,
        "training_support": 0.5
      }
    },
    {
      "id": "privft",
      "score": 1.875,
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 1.0,
        "verifiable_results": 0.0,
        "open_source": 0.0,
        "training_support": 1.0
      }
    },
    {
      "id": "chet",
      "score": 1.6229941831310801,
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 0.9959883662621603,
        "verifiable_results": 0.0,
        "open_source": 0.0,
        "training_support": 0.5
      }
    },
    {
      "id": "e2dm",
      "score": 1.6159738240898607,
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 0.9819476481797211,
        "verifiable_results": 0.0,
        "open_source": 0.0,
        "training_support": 0.5
      }
    }
  ]
};

// same query and filters, ui_weights: [5,5,5,8,2,5]
export const heBootstrapTunedWeights = {
  "catalog_version": 1,
  "weights_used": [
    0.5,
    0.5,
    0.5,
    0.8,
    0.2,
    0.5
  ],
  "ranking": [
    {
      "id": "cryptodl",
      "score": 2.62399709156554,
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 0.9979941831310801,
        "verifiable_results": 1.0,
        "open_source": 1.0,
        "training_support": 0.5
      }
    },
    {
      "id": "lowmemory20",
      "score": 2.611510881556514,
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 0.9730217631130278,
        "verifiable_results": 1.0,
        "open_source": 1.0,
        "training_support": 0.5
      }
    },
    {
      "id": "privft",
      "score": 1.875,
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 1.0,
        "verifiable_results": 0.0,
        "open_source": 0.0,
        "training_support": 1.0
      }
    },
    {
      "id": "chet",
      "score": 1.6229941831310801,
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 0.9959883662621603,
        "verifiable_results": 0.0,
        "open_source": 0.0,
        "training_support": 0.5
      }
    },
    {
      "id": "e2dm",
      "score": 1.6159738240898607,
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 0.9819476481797211,
        "verifiable_results": 0.0,
        "open_source": 0.0,
        "training_support": 0.5
      }
    }
  ]
};

// GET /api/frameworks
export const allListing = {
  "catalog_version": 1,
  "total": 9,
  "frameworks": [
    {
      "id": "aby3",
      "name": "ABY3",
      "technique": "MPC",
      "factor_vector": {
        "threat_model": 1.0,
        "privacy": 1.0,
        "published_accuracy": 0.9909738240898606,
        "verifiable_results": 1.0,
        "open_source": 1.0,
        "training_support": 1.0
      }
    },
    {
      "id": "chet",
      "name": "CHET",
      "technique": "HE",
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 0.9959883662621603,
        "verifiable_results": 0.0,
        "open_source": 0.0,
        "training_support": 0.5
      }
    },
    {
      "id": "cryptflow",
      "name": "CrypTFlow",
      "technique": "MPC",
      "factor_vector": {
        "threat_model": 1.0,
        "privacy": 1.0,
        "published_accuracy": 0.9889680072209407,
        "verifiable_results": 1.0,
        "open_source": 1.0,
        "training_support": 0.5
      }
    },
    {
      "id": "cryptodl",
      "name": "CryptoDL",
      "technique": "HE",
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 0.9979941831310801,
        "verifiable_results": 1.0,
        "open_source": 1.0,
        "training_support": 0.5
      }
    },
    {
      "id": "e2dm",
      "name": "E2DM",
      "technique": "HE",
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 0.9819476481797211,
        "verifiable_results": 0.0,
        "open_source": 0.0,
        "training_support": 0.5
      }
    },
    {
      "id": "lowmemory20",
      "name": "LowMemory20",
      "technique": "HE",
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 0.9730217631130278,
        "verifiable_results": 1.0,
        "open_source": 1.0,
        "training_support": 0.5
      }
    },
    {
      "id": "privft",
      "name": "PrivFT",
      "technique": "HE",
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 1.0,
        "verifiable_results": 0.0,
        "open_source": 0.0,
        "training_support": 1.0
      }
    },
    {
      "id": "pyhenet",
      "name": "PyHENet",
      "technique": "HE",
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 1.0,
        "verifiable_results": 1.0,
        "open_source": 1.0,
        "training_support": 1.0
      }
    },
    {
      "id": "pysyft",
      "name": "PySyft",
      "technique": "FL",
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 0.0,
        "verifiable_results": 1.0,
        "open_source": 1.0,
        "training_support": 1.0
      }
    }
  ]
};

// GET /api/frameworks?technique=HE
export const heListing = {
  "catalog_version": 1,
  "total": 6,
  "frameworks": [
    {
      "id": "chet",
      "name": "CHET",
      "technique": "HE",
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 0.9959883662621603,
        "verifiable_results": 0.0,
        "open_source": 0.0,
        "training_support": 0.5
      }
    },
    {
      "id": "cryptodl",
      "name": "CryptoDL",
      "technique": "HE",
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 0.9979941831310801,
        "verifiable_results": 1.0,
        "open_source": 1.0,
        "training_support": 0.5
      }
    },
    {
      "id": "e2dm",
      "name": "E2DM",
      "technique": "HE",
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 0.9819476481797211,
        "verifiable_results": 0.0,
        "open_source": 0.0,
        "training_support": 0.5
      }
    },
    {
      "id": "lowmemory20",
      "name": "LowMemory20",
      "technique": "HE",
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 0.9730217631130278,
        "verifiable_results": 1.0,
        "open_source": 1.0,
        "training_support": 0.5
      }
    },
    {
      "id": "privft",
      "name": "PrivFT",
      "technique": "HE",
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 1.0,
        "verifiable_results": 0.0,
        "open_source": 0.0,
        "training_support": 1.0
      }
    },
    {
      "id": "pyhenet",
      "name": "PyHENet",
      "technique": "HE",
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 1.0,
        "verifiable_results": 1.0,
        "open_source": 1.0,
        "training_support": 1.0
      }
    }
  ]
};

// GET /api/frameworks?technique=HE&tech.bootstrapping=true
export const heBootstrapListing = {
  "catalog_version": 1,
  "total": 5,
  "frameworks": [
    {
      "id": "chet",
      "name": "CHET",
      "technique": "HE",
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 0.9959883662621603,
        "verifiable_results": 0.0,
        "open_source": 0.0,
        "training_support": 0.5
      }
    },
    {
      "id": "cryptodl",
      "name": "CryptoDL",
      "technique": "HE",
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 0.9979941831310801,
        "verifiable_results": 1.0,
        "open_source": 1.0,
        "training_support": 0.5
      }
    },
    {
      "id": "e2dm",
      "name": "E2DM",
      "technique": "HE",
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 0.9819476481797211,
        "verifiable_results": 0.0,
        "open_source": 0.0,
        "training_support": 0.5
      }
    },
    {
      "id": "lowmemory20",
      "name": "LowMemory20",
      "technique": "HE",
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 0.9730217631130278,
        "verifiable_results": 1.0,
        "open_source": 1.0,
        "training_support": 0.5
      }
    },
    {
      "id": "privft",
      "name": "PrivFT",
      "technique": "HE",
      "factor_vector": {
        "threat_model": 0.75,
        "privacy": 1.0,
        "published_accuracy": 1.0,
        "verifiable_results": 0.0,
        "open_source": 0.0,
        "training_support": 1.0
      }
    }
  ]
};

// GET /api/frameworks/aby3
export const aby3Detail = {
  "catalog_version": 1,
  "framework": {
    "id": "aby3",
    "name": "ABY3",
    "technique": "MPC",
    "authors": [
      "Payman Mohassel",
      "Peter Rindal"
    ],
    "abstract": "A mixed-protocol framework for machine learning over three-party secret shares, switching between arithmetic, binary, and Yao representations. Supports private training and inference of linear models and neural networks.",
    "links": [
      "https://github.com/ladnir/aby3",
      "https://eprint.iacr.org/2018/403"
    ],
    "threat_models": [
      "malicious",
      "semi-honest"
    ],
    "data_privacy": true,
    "model_privacy": true,
    "training_support": "both",
    "open_source": true,
    "verified": true,
    "ml_models": [
      "CNN",
      "DNN",
      "Linear Regression",
      "Logistic Regression"
    ],
    "datasets": [
      "MNIST"
    ],
    "nonlinear_functions": [
      "ReLU",
      "Maxpool",
      "Sigmoid"
    ],
    "extension": {
      "technique": "MPC",
      "schemes": [
        "Secret Sharing",
        "Garbled Circuits"
      ],
      "num_participants": 3
    },
    "results": [
      {
        "dataset": "MNIST",
        "model": "CNN",
        "accuracy": 0.9881,
        "source": "published",
        "inference_time": 0.008,
        "memory": null,
        "communication": 5242880
      },
      {
        "dataset": "MNIST",
        "model": "CNN",
        "accuracy": 0.9912,
        "source": "verified",
        "inference_time": 0.011,
        "memory": 268435456,
        "communication": 5242880
      }
    ],
    "verification_notes": "Rebuilt from source; re-ran the MNIST CNN with three parties on a single LAN host."
  },
  "factor_vector": {
    "threat_model": 1.0,
    "privacy": 1.0,
    "published_accuracy": 0.9909738240898606,
    "verifiable_results": 1.0,
    "open_source": 1.0,
    "training_support": 1.0
  },
  "published_results": [
    {
      "dataset": "MNIST",
      "model": "CNN",
      "accuracy": 0.9881,
      "source": "published",
      "inference_time": 0.008,
      "memory": null,
      "communication": 5242880
    }
  ],
  "verified_results": [
    {
      "dataset": "MNIST",
      "model": "CNN",
      "accuracy": 0.9912,
      "source": "verified",
      "inference_time": 0.011,
      "memory": 268435456,
      "communication": 5242880
    }
  ],
  "verification_notes": "Rebuilt from source; re-ran the MNIST CNN with three parties on a single LAN host.",
  "links": [
    "https://github.com/ladnir/aby3",
    "https://eprint.iacr.org/2018/403"
  ]
};

