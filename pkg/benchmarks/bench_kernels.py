"""Compare the compiled and pure-Python integer kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Times each kernel on the odd-graph matrices (the largest exact workloads
in the package) and one end-to-end computation with each backend
installed.  Results of the two backends are asserted equal before any
time is reported.
"""
import argparse
import random
import timeit

from sl2bi.exactlinalg import _kernels_py, linalg, matrix
from sl2bi.oddgraph import (
    build_odd_graph,
    decompose_standard_module,
    dual_adjacency,
    surjectivity_witness,
    terwilliger_images,
)

try:
    from sl2bi.exactlinalg import _kernels_c
except ImportError:  # extension not built
    _kernels_c = None


def _int_matrix(m):
    return m.numerators()


def kernel_cases(seed):
    rng = random.Random(seed)
    g = build_odd_graph(4)
    a = _int_matrix(g.A)
    astar = _int_matrix(dual_adjacency(g, 15) * 9)
    z = _int_matrix(terwilliger_images(g, 15).Z * 81)
    dense = [[rng.randint(-9, 9) for _ in range(60)] for _ in range(60)]
    return [
        ("matmul A @ A (126x126)", "matmul", (a, a, len(a))),
        ("matmul Z @ A* (126x126)", "matmul", (z, astar, len(a))),
        ("echelon A (126x126)", "echelon", (a, len(a))),
        ("echelon random 60x60", "echelon", (dense, 60)),
    ]


def best_of(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def use_backend(mod):
    linalg.kernels = mod
    matrix.kernels = mod


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args(argv)
    if _kernels_c is None:
        parser.exit(1, "compiled kernels are not built; run pip install -e . --no-build-isolation\n")

    print(f"{'case':36} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, fn_name, call_args in kernel_cases(args.seed):
        py_fn, c_fn = getattr(_kernels_py, fn_name), getattr(_kernels_c, fn_name)
        assert py_fn(*call_args) == c_fn(*call_args), name
        tp = best_of(lambda: py_fn(*call_args), args.repeat)
        tc = best_of(lambda: c_fn(*call_args), args.repeat)
        print(f"{name:36} {tp:10.4f} {tc:10.4f} {tp / tc:8.1f}x")

    # end to end: the algebra generated by the d=4 images (incremental span)
    report = decompose_standard_module(4)
    saved = linalg.kernels
    timings = {}
    for label, mod in (("python", _kernels_py), ("cython", _kernels_c)):
        use_backend(mod)
        got, expected = surjectivity_witness(report)
        assert got == expected
        timings[label] = best_of(lambda: surjectivity_witness(report), 1)
    use_backend(saved)
    tp, tc = timings["python"], timings["cython"]
    print(f"{'algebra dimension, d=4 (70)':36} {tp:10.4f} {tc:10.4f} {tp / tc:8.1f}x")


if __name__ == "__main__":
    main()
