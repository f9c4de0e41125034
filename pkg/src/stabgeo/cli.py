"""Command-line front-end and the random-circuit benchmark harness.

Subcommands: canon, synth, inner, wedge, ortho, neighbors, enum, hist,
localsearch, evade, bench, measure.  All randomized paths are driven by
an explicit --seed.  Reports are written as CSV (sorted, deterministic);
``--plot`` additionally renders a matplotlib figure next to the
delimited output.

Exit codes: 0 ok, 1 usage error, 2 parse error, 3 domain error.
"""

from __future__ import annotations

import argparse
import csv
import random
import statistics
import sys
import time
from fractions import Fraction

from . import census, geometry, synth
from .clifford import (
    CliffordCircuit,
    Gate,
    conjugate_circuit,
    emit_circuit,
    measure,
    parse_circuit,
)
from .errors import ParseError, StabgeoError
from .exact import ExactScalar, parse_scalar
from .fixtures import TWO_QUBIT_STATES
from .geometry import StabilizerSum
from .tableau import StabilizerMatrix, canonicalize, emit_matrix, parse_matrix


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# -- random circuits and benchmark --------------------------------------


def gate_budget(n: int, beta: Fraction) -> int:
    """ceil(beta * n * log2(n)), computed exactly for rational beta."""
    if n <= 1:
        return 0
    p, q = beta.numerator, beta.denominator
    target = n ** (n * p)  # need smallest m with 2^(m q) >= n^(n p)
    bits = target.bit_length()
    needed = bits - 1 if target == 1 << (bits - 1) else bits
    return -(-needed // q)


def random_circuit(n: int, beta: Fraction, seed) -> CliffordCircuit:
    """ceil(beta n log2 n) gates, kind uniform over {CNOT, P, H},
    qubits uniform with control != target; fully seed-determined."""
    rng = random.Random(seed)
    kinds = ("CNOT", "P", "H") if n >= 2 else ("P", "H")
    gates = []
    for _ in range(gate_budget(n, beta)):
        kind = kinds[rng.randrange(len(kinds))]
        if kind == "CNOT":
            control = rng.randrange(n)
            target = rng.randrange(n - 1)
            if target >= control:
                target += 1
            gates.append(Gate("CNOT", target, control=control))
        else:
            gates.append(Gate(kind, rng.randrange(n)))
    return CliffordCircuit(n, tuple(gates))


def random_state(n: int, beta: Fraction, seed) -> StabilizerMatrix:
    circuit = random_circuit(n, beta, seed)
    return conjugate_circuit(StabilizerMatrix.zero_state(n), circuit)


def bench_inner(ns, betas, reps: int, seed: int, special: str | None = None):
    """Time the inner product on random state pairs per (n, beta).

    ``special`` replaces the first state by "zero" or "ghz".  Rows:
    (n, beta, mean_seconds, median_seconds, mean_gates) where the gate
    count is the size of the basis-normalization circuit of the first
    state.
    """
    rows = []
    for n in sorted(ns):
        for beta in sorted(betas):
            times, gates = [], []
            for rep in range(reps):
                tag = f"{seed}:{n}:{beta}:{rep}"
                if special == "zero":
                    left = StabilizerMatrix.zero_state(n)
                elif special == "ghz":
                    left = StabilizerMatrix.ghz_state(n)
                else:
                    left = random_state(n, beta, tag + ":a")
                right = random_state(n, beta, tag + ":b")
                circuit, _, _ = synth.basis_norm_circuit(left)
                gates.append(len(circuit))
                start = time.perf_counter()
                geometry.inner_product_abs(left, right)
                times.append(time.perf_counter() - start)
            rows.append((n, float(beta), statistics.mean(times),
                         statistics.median(times), statistics.mean(gates)))
    return rows


def fit_exponent(points) -> float:
    """Least-squares slope of log y against log x."""
    import math
    xs = [math.log(x) for x, y in points if y > 0]
    ys = [math.log(y) for x, y in points if y > 0]
    mx = sum(xs) / len(xs)
    my = sum(ys) / len(ys)
    num = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    den = sum((x - mx) ** 2 for x in xs)
    return num / den


# -- I/O helpers ---------------------------------------------------------


def _read_matrix(path: str) -> StabilizerMatrix:
    with open(path) as fh:
        return parse_matrix(fh.read())


def _read_sum(path: str) -> StabilizerSum:
    """Superposition file: terms separated by blank lines, each term a
    ``coeff: <scalar>`` line followed by generator rows."""
    with open(path) as fh:
        text = fh.read()
    blocks = [b for b in text.split("\n\n") if b.strip()]
    terms = []
    n = None
    for block in blocks:
        lines = [ln for ln in block.splitlines() if ln.split("#")[0].strip()]
        if not lines or not lines[0].lower().startswith("coeff"):
            raise ParseError("each term needs a 'coeff: <scalar>' line")
        coeff = parse_scalar(lines[0].split(":", 1)[1])
        mat = canonicalize(parse_matrix("\n".join(lines[1:])))
        n = mat.n if n is None else n
        terms.append((coeff.to_cyc(), mat))
    if n is None:
        raise ParseError("no terms found")
    return StabilizerSum(n, terms)


def _write(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _write_csv(header, rows, out: str | None):
    if out:
        with open(out, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(header)
            w.writerows(rows)
    else:
        w = csv.writer(sys.stdout)
        w.writerow(header)
        w.writerows(rows)


def _plot_rows(kind: str, rows, path: str):
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    if kind == "hist":
        labels = [str(k) for _, k, _, _ in rows]
        fractions = [float(f) for _, _, _, f in rows]
        fig, ax = plt.subplots(figsize=(6, 4))
        ax.bar(labels, fractions, color="#4878a8")
        ax.set_xlabel("k (inner-product magnitude $2^{-k/2}$; orth = 0)")
        ax.set_ylabel("fraction of other states")
        ax.set_title(f"angle distribution, n={rows[0][0]}")
    else:
        fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
        betas = sorted({b for _, b, _, _, _ in rows})
        for beta in betas:
            pts = [(n, t) for n, b, t, _, _ in rows if b == beta]
            ax1.plot([p[0] for p in pts], [p[1] for p in pts],
                     marker="o", label=f"beta={beta}")
            gts = [(n, g) for n, b, _, _, g in rows if b == beta]
            ax2.plot([p[0] for p in gts], [p[1] for p in gts],
                     marker="s", label=f"beta={beta}")
        ax1.set_xlabel("n")
        ax1.set_ylabel("mean seconds per inner product")
        ax1.set_xscale("log")
        ax1.set_yscale("log")
        ax1.legend()
        ax2.set_xlabel("n")
        ax2.set_ylabel("mean basis-normalization gates")
        ax2.set_xscale("log")
        ax2.set_yscale("log")
        ax2.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


# -- subcommand bodies ---------------------------------------------------


def _cmd_canon(args):
    _write(emit_matrix(canonicalize(_read_matrix(args.matrix))), args.out)
    return 0


def _cmd_synth(args):
    circuit, index, _ = synth.basis_norm_circuit(_read_matrix(args.matrix))
    _write(emit_circuit(circuit) if circuit.gates else "# empty circuit",
           args.out)
    bits = format(index, f"0{circuit.n}b")
    print(f"basis_index {index} |{bits}>")
    return 0


def _cmd_inner(args):
    left = _read_matrix(args.matrix)
    right = _read_matrix(args.other)
    if args.complex:
        value = geometry.inner_product_complex(left, right)
    else:
        value = geometry.inner_product_abs(left, right)
    print(value)
    return 0


def _cmd_wedge(args):
    left = _read_matrix(args.matrix)
    right = _read_matrix(args.other)
    print(geometry.wedge_norm(left, right))
    if args.out:
        mat = geometry.bivector(left, right)
        _write(emit_matrix(mat), args.out)
    return 0


def _cmd_ortho(args):
    result = geometry.orthogonalize(_read_sum(args.sum))
    chunks = []
    for coeff, mat in result:
        chunks.append(f"# coeff {coeff.to_complex():.6g}\n{emit_matrix(mat)}")
    _write("\n\n".join(chunks) if chunks else "# zero sum", args.out)
    return 0


def _cmd_neighbors(args):
    mats = geometry.nearest_neighbors(_read_matrix(args.matrix))
    _write("\n\n".join(emit_matrix(m) for m in mats), args.out)
    print(f"count {len(mats)}", file=sys.stderr)
    return 0


def _cmd_enum(args):
    n = args.n
    if args.verify:
        if n != 2:
            print("--verify compares against the two-qubit golden table; "
                  "use --n 2", file=sys.stderr)
            return 1
        enumerated = {canonicalize(m).key()
                      for m in census.enumerate_states(2)}
        golden = set()
        for _, gens, _ in TWO_QUBIT_STATES:
            golden.add(canonicalize(parse_matrix("\n".join(gens))).key())
        if enumerated != golden or len(enumerated) != 60:
            print("golden-table mismatch", file=sys.stderr)
            return 1
        print("ok: enumeration matches the 60 golden two-qubit states")
        return 0
    rows = [(n, "states", census.count_states(n), Fraction(1))]
    count = 0
    if args.format == "text" and not args.out:
        for m in census.enumerate_states(n):
            count += 1
            print(emit_matrix(m))
            print()
    else:
        lines = []
        for m in census.enumerate_states(n):
            count += 1
            lines.append(emit_matrix(m))
        _write("\n\n".join(lines), args.out)
    if count != census.count_states(n):
        print("enumeration count mismatch", file=sys.stderr)
        return 1
    return 0


def _cmd_hist(args):
    ref = _read_matrix(args.ref) if args.ref else None
    report = census.angle_histogram(args.n, ref)
    rows = report.rows()
    if args.format == "csv" or args.out:
        _write_csv(("n", "k", "count", "fraction"),
                   [(n, k, c, f"{float(f):.6f}") for n, k, c, f in rows],
                   args.out)
    else:
        for n, k, c, f in rows:
            print(f"n={n} k={k} count={c} fraction={float(f):.4f}")
    if args.plot:
        _plot_rows("hist", rows, args.plot)
    return 0


def _cmd_localsearch(args):
    eps = Fraction(args.epsilon)
    target = census.DenseState.spiked_uniform(args.n, eps)
    start = StabilizerMatrix.zero_state(args.n)
    final, trace = census.local_search(target, start)
    for i, m in enumerate(trace):
        print(f"# step {i}, overlap^2 = "
              f"{float(target.overlap_sq_with(m)):.6f}")
        print(emit_matrix(m))
        print()
    if args.out:
        _write(emit_matrix(final), args.out)
    return 0


def _cmd_evade(args):
    rows = []
    for pairs in range(1, args.n + 1):
        target = census.DenseState.evading(pairs)
        sq, best = census.max_overlap(target)
        bound = (3 / 4) ** pairs
        rows.append((2 * pairs, f"{float(sq) ** 0.5:.6f}",
                     f"{bound ** 0.5:.6f}"))
        if args.verbose:
            print(f"# argmax for {2 * pairs} qubits:", file=sys.stderr)
            print(emit_matrix(best), file=sys.stderr)
    _write_csv(("qubits", "max_overlap", "bound"), rows, args.out)
    return 0


def _cmd_bench(args):
    ns = args.n or [20, 40, 60, 80, 100]
    betas = [Fraction(b) for b in (args.beta or ["0.6", "1.2"])]
    rows = bench_inner(ns, betas, args.reps, args.seed, special=args.special)
    _write_csv(("n", "beta", "mean_seconds", "median_seconds", "mean_gates"),
               [(n, b, f"{t:.6f}", f"{md:.6f}", f"{g:.1f}")
                for n, b, t, md, g in rows], args.out)
    for beta in {b for _, b, _, _, _ in rows}:
        pts_t = [(n, t) for n, b, t, _, _ in rows if b == beta]
        pts_g = [(n, g) for n, b, _, _, g in rows if b == beta]
        if len(pts_t) >= 2:
            print(f"# beta={beta}: runtime exponent "
                  f"{fit_exponent(pts_t):.2f}, circuit-size exponent "
                  f"{fit_exponent(pts_g):.2f}", file=sys.stderr)
    if args.plot:
        _plot_rows("bench", rows, args.plot)
    return 0


def _cmd_measure(args):
    mat = _read_matrix(args.matrix)
    rng = random.Random(args.seed)
    outcome, post = measure(mat, args.qubit - 1, rng)
    print(f"outcome {outcome}")
    _write(emit_matrix(post), args.out)
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="stabgeo",
                     description="exact stabilizer-state geometry toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(fn=fn)
        p.add_argument("--out", help="write the primary output to this file")
        return p

    p = add("canon", _cmd_canon, "canonicalize a stabilizer matrix file")
    p.add_argument("matrix")

    p = add("synth", _cmd_synth,
            "synthesize the basis-normalization circuit of a state")
    p.add_argument("matrix")

    p = add("inner", _cmd_inner, "inner product of two states")
    p.add_argument("matrix")
    p.add_argument("other")
    p.add_argument("--complex", action="store_true",
                   help="track phases for the complex-valued product")

    p = add("wedge", _cmd_wedge,
            "wedge-product norm (and bivector matrix with --out)")
    p.add_argument("matrix")
    p.add_argument("other")

    p = add("ortho", _cmd_ortho, "orthogonalize a stabilizer superposition")
    p.add_argument("sum", help="superposition file (coeff + matrix blocks)")

    p = add("neighbors", _cmd_neighbors, "all nearest-neighbor states")
    p.add_argument("matrix")

    p = add("enum", _cmd_enum, "enumerate all n-qubit stabilizer states")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true",
                   help="check the n=2 enumeration against the golden table")
    p.add_argument("--format", choices=("text", "csv"), default="text")

    p = add("hist", _cmd_hist, "angle distribution against one state")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ref", help="reference matrix file (default |0...0>)")
    p.add_argument("--format", choices=("text", "csv"), default="csv")
    p.add_argument("--plot", help="also render a PNG bar chart here")

    p = add("localsearch", _cmd_localsearch,
            "greedy nearest-neighbor walk toward a spiked-uniform target")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--epsilon", default="1",
                   help="spike size (rational, e.g. 1 or 3/2)")

    p = add("evade", _cmd_evade,
            "max stabilizer overlap of the evading family")
    p.add_argument("--n", type=int, default=2,
                   help="number of qubit pairs to sweep")
    p.add_argument("--verbose", action="store_true")

    p = add("bench", _cmd_bench, "random-circuit inner-product benchmark")
    p.add_argument("--n", type=int, nargs="+")
    p.add_argument("--beta", nargs="+", help="gate-density multipliers")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--special", choices=("zero", "ghz"),
                   help="fix the left state instead of randomizing it")
    p.add_argument("--plot", help="also render runtime/size figures here")

    p = add("measure", _cmd_measure, "measure one qubit")
    p.add_argument("matrix")
    p.add_argument("--qubit", type=int, required=True, help="1-based")
    p.add_argument("--seed", type=int, default=0)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except StabgeoError as exc:
        print(f"error: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
