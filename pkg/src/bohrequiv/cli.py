"""Command-line front end: ``bohrequiv {basis,equiv,generate,sample,verify}``.

Reports are JSON on stdout. Failures print ``{"error": <class>, "message": ...}``
on stderr. Exit codes: 0 success / PASS / equivalent, 1 FAIL / not
equivalent, 2 error, 3 oracle disagreement.
"""

import argparse
import json
import sys
from fractions import Fraction

from .document import dump_sum, format_rational, load_sum
from .equivalence import (
    admissible_residues,
    decide_equiv,
    decide_equiv_prop1_all_n,
    generate_member,
    natural_basis,
)
from .errors import BohrEquivError
from .exponents import change_of_basis
from .rational import as_fraction
from .valuesets import (
    sample_line,
    sample_torus,
    verify_lemma1,
    verify_prop3,
    verify_prop4,
    verify_theorem1,
)

__all__ = ["Lcg64", "main", "build_parser"]


class Lcg64:
    """64-bit linear congruential generator (Knuth's MMIX constants).

    ``state <- (6364136223846793005 * state + 1442695040888963407) mod 2**64``.
    ``uniform`` takes the top 53 bits, ``turn`` the top 32 bits as an exact
    rational in ``[0, 1)``.
    """

    A = 6364136223846793005
    C = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed):
        self.state = int(seed) & self.MASK

    def next(self):
        self.state = (self.A * self.state + self.C) & self.MASK
        return self.state

    def uniform(self):
        return (self.next() >> 11) / float(1 << 53)

    def open_uniform(self):
        """Uniform in ``(0, 1)``: midpoint of the 53-bit cell."""
        return ((self.next() >> 11) + 0.5) / float(1 << 53)

    def turn(self):
        return Fraction(self.next() >> 32, 1 << 32)

    def below(self, n):
        return (self.next() >> 32) * n >> 32


class OracleDisagreement(BohrEquivError):
    pass


def _rationals(text, name):
    try:
        return tuple(as_fraction(v) for v in text.split(",")) if text.strip() else ()
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{name}: expected comma-separated rationals")


def _matrix(text):
    return [list(_rationals(row, "--other-basis")) for row in text.split(";")]


def _emit(obj):
    json.dump(obj, sys.stdout, indent=2, default=_jsonable)
    sys.stdout.write("\n")


def _jsonable(v):
    if isinstance(v, Fraction):
        return format_rational(v)
    if hasattr(v, "item"):
        return v.item()
    if isinstance(v, tuple):
        return list(v)
    raise TypeError(f"cannot encode {type(v).__name__}")


def cmd_basis(args):
    f = load_sum(args.file)
    b = natural_basis(f.exponents)
    _emit({
        "basis_indices": list(b.basis_indices),
        "basis": [[format_rational(c) for c in fr.coords] for fr in b.basis],
        "coord_matrix": [[format_rational(c) for c in r] for r in b.coord_matrix],
        "integral": b.integral,
        "row_denominators": list(b.row_denominators),
    })
    return 0


def cmd_equiv(args):
    f1, f2 = load_sum(args.file_a), load_sum(args.file_b)
    verdict = decide_equiv(f1, f2, args.tol)
    report = verdict.as_dict()
    if args.oracle:
        other = decide_equiv_prop1_all_n(f1, f2, args.tol)
        report["oracle"] = other.as_dict()
        if other.equivalent != verdict.equivalent:
            raise OracleDisagreement(
                f"decide_equiv says {verdict.equivalent}, oracle says {other.equivalent}")
    _emit(report)
    return 0 if verdict.equivalent else 1


def cmd_generate(args):
    f = load_sum(args.file)
    basis = natural_basis(f.exponents)
    report = {}
    if args.x is not None:
        x = args.x
    else:
        rng = Lcg64(args.seed)
        x = tuple(rng.turn() for _ in range(basis.dim))
        report["seed"] = args.seed
    if args.residues is not None:
        residues = tuple(int(v) for v in args.residues)
    elif args.seed is not None and args.x is None:
        group = admissible_residues(basis.coord_matrix)
        residues = group[rng.below(len(group))]
    else:
        residues = None
    g = generate_member(f, x, residues)
    report.update({"x_turns": list(x), "residues": list(residues or (0,) * len(f))})
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            dump_sum(g, fh)
        json.dump(report, sys.stderr, default=_jsonable)
        sys.stderr.write("\n")
    else:
        dump_sum(g, sys.stdout)
        if "seed" in report:
            json.dump(report, sys.stderr, default=_jsonable)
            sys.stderr.write("\n")
    return 0


def cmd_sample(args):
    f = load_sum(args.file)
    if args.kind == "line":
        cloud = sample_line(f, args.sigma, args.tmax, args.step)
    else:
        cloud = sample_torus(f, args.sigma, args.grid, args.residue_mode)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            cloud.to_csv(fh)
    else:
        cloud.to_csv(sys.stdout)
    return 0


def _need(files, n, check):
    if len(files) != n:
        raise argparse.ArgumentTypeError(f"verify {check} takes {n} file(s)")
    return [load_sum(p) for p in files]


def _prop3_samples(f, n, t_max, seed):
    rng = Lcg64(seed)
    lo, hi = -1.0, 1.0
    if f.strip is not None:
        lo, hi = max(lo, f.strip[0]), min(hi, f.strip[1])
    return [(lo + (hi - lo) * rng.open_uniform(), t_max * (2 * rng.uniform() - 1))
            for _ in range(n)]


def cmd_verify(args):
    check = args.check
    if check == "theorem1":
        f1, f2 = _need(args.files, 2, check)
        report = verify_theorem1(f1, f2, args.sigma_lo, args.sigma_hi, args.sigma_steps,
                                 args.tmax, args.step, args.tol)
    elif check == "prop3":
        f1, f2 = _need(args.files, 2, check)
        verdict = decide_equiv(f1, f2)
        samples = _prop3_samples(f1, args.samples, args.tmax, args.seed)
        report = verify_prop3(f1, f2, verdict, samples)
        report["seed"] = args.seed
    elif check == "prop4":
        (f,) = _need(args.files, 1, check)
        report = verify_prop4(f, args.sigma, args.tmax, args.step, args.grid, args.tol)
    else:
        (f,) = _need(args.files, 1, check)
        if args.other_basis is None:
            raise argparse.ArgumentTypeError("verify lemma1 needs --other-basis")
        gens = f.exponents.generators
        other = [gens.frequency(row) for row in args.other_basis]
        change_of_basis(natural_basis(f.exponents), other)  # validate early
        report = verify_lemma1(f, other, args.sigma, args.grid, args.tol)
    report["result"] = "PASS" if report["pass"] else "FAIL"
    _emit(report)
    return 0 if report["pass"] else 1


def build_parser():
    p = argparse.ArgumentParser(prog="bohrequiv", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("basis", help="natural basis report")
    b.add_argument("file")
    b.set_defaults(func=cmd_basis)

    e = sub.add_parser("equiv", help="decide equivalence of two sums")
    e.add_argument("file_a")
    e.add_argument("file_b")
    e.add_argument("--tol", type=float, default=None,
                   help="numeric tolerance (numeric sums only; default 1e-9)")
    e.add_argument("--oracle", action="store_true",
                   help="also run the truncation oracle and require agreement")
    e.set_defaults(func=cmd_equiv)

    g = sub.add_parser("generate", help="new member of the equivalence class")
    g.add_argument("file")
    src = g.add_mutually_exclusive_group(required=True)
    src.add_argument("--x", type=lambda s: _rationals(s, "--x"),
                     help="parameters in turns, e.g. 1/3,0")
    src.add_argument("--seed", type=int, help="draw x (and residues) with Lcg64")
    g.add_argument("--residues", type=lambda s: _rationals(s, "--residues"))
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("sample", help="value-set sample as CSV")
    s.add_argument("file")
    s.add_argument("kind", choices=["line", "torus"])
    s.add_argument("--sigma", type=float, default=0.0)
    s.add_argument("--tmax", type=float, default=100.0)
    s.add_argument("--step", type=float, default=0.01)
    s.add_argument("--grid", type=int, default=64)
    s.add_argument("--residue-mode", choices=["all", "zero"], default="all")
    s.add_argument("--out")
    s.set_defaults(func=cmd_sample)

    v = sub.add_parser("verify", help="sampled structural checks")
    v.add_argument("check", choices=["theorem1", "prop3", "prop4", "lemma1"])
    v.add_argument("files", nargs="+")
    v.add_argument("--sigma", type=float, default=0.0)
    v.add_argument("--sigma-lo", type=float, default=-0.1)
    v.add_argument("--sigma-hi", type=float, default=0.1)
    v.add_argument("--sigma-steps", type=int, default=5)
    v.add_argument("--tmax", type=float, default=2000.0)
    v.add_argument("--step", type=float, default=0.01)
    v.add_argument("--grid", type=int, default=200)
    v.add_argument("--tol", type=float, default=None)
    v.add_argument("--samples", type=int, default=200)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--other-basis", type=_matrix,
                   help="rows over the generators, e.g. '1,1;1,-1'")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.check == "theorem1" and args.tol is None:
        args.tol = 0.05
    try:
        return args.func(args)
    except (BohrEquivError, ValueError, TypeError, OSError,
            argparse.ArgumentTypeError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        if hasattr(exc, "path"):
            err["path"] = exc.path
        json.dump(err, sys.stderr)
        sys.stderr.write("\n")
        return 3 if isinstance(exc, OracleDisagreement) else 2


if __name__ == "__main__":
    sys.exit(main())
