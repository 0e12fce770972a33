"""Benchmark the closure kernels: compiled extension vs pure Python.

Default workloads are the mod-2 symplectic groups reachable from the
generator sets this package cares about:

  Sp(4,2), order 720        (genus 2 twist images)
  Sp(6,2), order 1451520    (genus 3 twist images; the acceptance case)

The pure backend runs Sp(6,2) only with --full, since it takes a while.

Usage: python benchmarks/bench_kernels.py [--full]
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from mcgtorsion import kernels  # noqa: E402
from mcgtorsion.curves import lickorish_system  # noqa: E402
from mcgtorsion.symplectic import reduce_mod_p  # noqa: E402
from mcgtorsion.theorem import sp_modp_order  # noqa: E402
from mcgtorsion.torsion import theorem_generators  # noqa: E402


def workloads(full):
    yield "Sp(4,2) twists", [u.twist for u in lickorish_system(2).curves], 2, 720, True
    yield (
        "Sp(6,2) torsion",
        [c.matrix for c in theorem_generators(3)],
        2,
        sp_modp_order(3, 2),
        full,
    )
    yield (
        "Sp(6,2) twists",
        [u.twist for u in lickorish_system(3).curves],
        2,
        sp_modp_order(3, 2),
        full,
    )


def run_backend(backend, gens, p):
    mats = [reduce_mod_p(m, p) for m in gens]
    t0 = time.perf_counter()
    result = kernels.modp_closure(mats, p, backend=backend)
    return result.size, time.perf_counter() - t0


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true",
                        help="also run the pure backend on the Sp(6,2) cases")
    args = parser.parse_args()

    backends = ["pure"]
    if kernels.BACKEND == "compiled":
        backends.insert(0, "compiled")
    else:
        print("note: compiled kernel not built; benchmarking pure only")

    print(f"{'workload':<18} {'backend':<10} {'order':>10} {'seconds':>9}")
    for name, gens, p, expected, run_pure in workloads(args.full):
        times = {}
        for backend in backends:
            if backend == "pure" and not run_pure:
                print(f"{name:<18} {'pure':<10} {'(skipped; use --full)':>20}")
                continue
            size, dt = run_backend(backend, gens, p)
            assert size == expected, f"{name}: got {size}, expected {expected}"
            times[backend] = dt
            print(f"{name:<18} {backend:<10} {size:>10} {dt:>9.3f}")
        if len(times) == 2:
            print(f"{'':<18} speedup: {times['pure'] / times['compiled']:.1f}x")


if __name__ == "__main__":
    main()
