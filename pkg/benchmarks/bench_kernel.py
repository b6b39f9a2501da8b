"""Time one training and one evaluation presentation on each simulation core.

    python benchmarks/bench_kernel.py [--samples 20] [--mode prob_meta_individual]
"""

import argparse
import time

import numpy as np

from memcl._core import AVAILABLE
from memcl.config import ExperimentConfig
from memcl.network import Network


def bench(backend: str, mode: str, images: np.ndarray) -> tuple[float, float]:
    cfg = ExperimentConfig.from_dict({
        "plasticity": {"mode": mode, "u_th": 0.1, "i_max": [2.0, 6.0]},
        "sim": {"rate_max": 1000.0, "error_neuron": "integrating", "target_period": 5},
    })
    net = Network(cfg.network_spec(), np.random.default_rng(0), backend=backend)
    rng = np.random.default_rng(1)
    t0 = time.perf_counter()
    for k, x in enumerate(images):
        net.train_sample(x, k % 2, rng)
    t1 = time.perf_counter()
    for x in images:
        net.output_counts(x, rng)
    t2 = time.perf_counter()
    n = len(images)
    return (t1 - t0) / n, (t2 - t1) / n


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=20)
    ap.add_argument("--mode", default="prob_meta_individual")
    args = ap.parse_args()
    # sparse digit-like inputs: about 19% of pixels lit
    rng = np.random.default_rng(0)
    images = np.where(rng.random((args.samples, 784)) < 0.19, rng.random((args.samples, 784)), 0.0)
    rows = {b: bench(b, args.mode, images) for b in AVAILABLE}
    print(f"{'backend':<10}{'train ms':>10}{'eval ms':>10}")
    for b, (tr, ev) in rows.items():
        print(f"{b:<10}{1e3 * tr:>10.2f}{1e3 * ev:>10.2f}")
    if len(rows) == 2:
        (ct, ce), (pt, pe) = rows["compiled"], rows["python"]
        print(f"speedup   {pt / ct:>9.1f}x{pe / ce:>9.1f}x")


if __name__ == "__main__":
    main()
