"""Command line front end.

Usage::

    spherearr <subcommand> --input <path|@fixture> [options]

Exit status: 0 OK, 1 a verdict failed (or an internal check fired),
2 input error, 3 a budget was exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import os
import sys
from functools import cached_property
from pathlib import Path

from . import __version__
from .arrangement import (
    DEFAULT_SCAN_LIMIT,
    Arrangement,
    FacePoset,
    dump_faces,
    enumerate_faces,
    format_arrangement,
    intersection_poset,
    load_faces,
    parse_arrangement,
    validate,
)
from .decomposition import decomposition_report, mobius_rank_formula
from .errors import BudgetError, InputError, SphereArrError
from .fixtures import fixture
from .homology import (
    CellPoset,
    ChainComplex,
    HomologyResult,
    homology,
    incidence_numbers,
    order_complex_homology,
    parse_chain_complex,
)
from .projective import lift_parity, projective_words_equal, quotient_complex, quotient_homology
from .salvetti import SalComplex, build_salvetti, to_dot
from .words import DEFAULT_CLOSURE_BUDGET, Groupoid, parse_word

CACHE_ENV = "SPHEREARR_CACHE_DIR"
SUBCOMMANDS = ("validate", "faces", "iposet", "salvetti", "homology", "decompose", "ranks", "word", "projective", "report")

EXIT_OK, EXIT_VERDICT, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def _ok(flag: bool) -> str:
    return "OK" if flag else "FAIL"


def _join(xs) -> str:
    return " ".join(str(x) for x in xs)


def read_input(source: str) -> str:
    """Arrangement text for a path or ``@fixture`` reference."""
    if source.startswith("@"):
        return format_arrangement(fixture(source))
    try:
        return Path(source).read_text()
    except OSError as exc:
        raise InputError("E_IO", f"cannot read {source}: {exc.strerror}") from None


class Session:
    """Lazily computed pipeline stages for one input, backed by an optional cache."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.text = read_input(args.input)
        self.cache_dir = self._cache_dir()

    def _cache_dir(self) -> Path | None:
        if self.args.no_cache:
            return None
        root = self.args.cache_dir or os.environ.get(CACHE_ENV)
        if not root:
            return None
        key = hashlib.sha256(f"{__version__}\0{self.text}".encode()).hexdigest()
        path = Path(root) / key
        try:
            path.mkdir(parents=True, exist_ok=True)
        except OSError:
            return None
        return path if os.access(path, os.W_OK) else None

    def _cached(self, name: str, compute, serialise):
        if self.cache_dir is not None:
            f = self.cache_dir / name
            if f.exists():
                return f.read_text(), True
        value = compute()
        text = serialise(value)
        if self.cache_dir is not None:
            tmp = self.cache_dir / (name + ".tmp")
            tmp.write_text(text)
            tmp.replace(self.cache_dir / name)
        return value, False

    @cached_property
    def arrangement(self) -> Arrangement:
        return parse_arrangement(self.text)

    @cached_property
    def faces(self) -> FacePoset:
        a = self.arrangement
        validate(a).raise_if_invalid()
        value, hit = self._cached("faces.txt", lambda: enumerate_faces(a, self.args.scan_limit), dump_faces)
        return load_faces(value, a) if hit else value

    @cached_property
    def salvetti(self) -> SalComplex:
        return build_salvetti(self.faces)

    @cached_property
    def chains(self) -> ChainComplex:
        value, hit = self._cached(
            "salvetti_chains.txt",
            lambda: incidence_numbers(CellPoset.from_salvetti(self.salvetti)),
            lambda cc: cc.export(),
        )
        return parse_chain_complex(value) if hit else value

    @cached_property
    def homology(self) -> HomologyResult:
        return homology(self.chains)

    @cached_property
    def groupoid(self) -> Groupoid:
        return Groupoid(self.faces, budget=self.args.budget)


# -- subcommands ---------------------------------------------------------------


def cmd_validate(s: Session, out) -> int:
    report = validate(s.arrangement)
    out(report.render())
    return EXIT_OK if report.ok else EXIT_INPUT


def cmd_faces(s: Session, out) -> int:
    fp = s.faces
    out(f"faces by dimension: {_join(fp.count_by_dim())}")
    out(f"chambers: {len(fp.chambers)}")
    for f in fp.faces:
        out(f"{f.dim} {f.label()}")
    return EXIT_OK


def cmd_iposet(s: Session, out) -> int:
    p = intersection_poset(s.arrangement)
    out(f"elements by rank: {_join(p.rank_counts())}")
    for e in p.elements:
        out(f"{e.rank} {e.label()} mu={e.mobius}")
    return EXIT_OK


def _export(path: str | None, text: str):
    if path:
        try:
            Path(path).write_text(text)
        except OSError as exc:
            raise InputError("E_IO", f"cannot write {path}: {exc.strerror}") from None


def cmd_salvetti(s: Session, out) -> int:
    sal = s.salvetti
    counts = sal.count_by_dim()
    chi = sum((-1) ** k * c for k, c in enumerate(counts))
    out(f"cells by dimension: {_join(counts)}")
    out(f"euler characteristic: {chi}")
    out(f"chambers: {len(s.faces.chambers)}")
    _export(s.args.export_dot, to_dot(sal))
    _export(s.args.export_chains, s.chains.export())
    return EXIT_OK


def cmd_homology(s: Session, out) -> int:
    h = s.homology
    out(h.betti_line())
    for line in h.lines():
        out(line)
    out(f"euler characteristic: {h.euler_characteristic}")
    _export(s.args.export_chains, s.chains.export())
    _export(s.args.export_dot, to_dot(s.salvetti))
    if s.args.oracle:
        other = order_complex_homology(CellPoset.from_salvetti(s.salvetti))
        out(f"order complex: {other.betti_line()} {_ok(other == h)}")
        return EXIT_OK if other == h else EXIT_VERDICT
    return EXIT_OK


def cmd_decompose(s: Session, out) -> int:
    rep = decomposition_report(s.arrangement, s.args.seed, s.faces, s.homology)
    out(rep.render())
    return EXIT_OK if rep.verdict else EXIT_VERDICT


def cmd_ranks(s: Session, out) -> int:
    rep = mobius_rank_formula(s.arrangement, s.faces, s.homology)
    out(rep.render())
    return EXIT_OK if rep.verdict else EXIT_VERDICT


def cmd_word(s: Session, out) -> int:
    if len(s.args.words) != 2:
        raise InputError("E_USAGE", "word needs exactly two words")
    g = s.groupoid
    u, v = (parse_word(t, s.faces) for t in s.args.words)
    if s.args.quotient:
        decide = lambda: projective_words_equal(g, u, v)  # noqa: E731
        for name, w in (("u", u), ("v", v)):
            out(f"{name}: {w.render()} lift parity={lift_parity(w)}")
    else:
        decide = lambda: g.words_equal(u, v)  # noqa: E731
        for name, w in (("u", u), ("v", v)):
            if not w.is_loop:
                raise InputError("E_BAD_WORD", f"{name} is not a loop")
            out(f"{name}: {g.normal_form(w).render()}")
    try:
        verdict = "equal" if decide() else "unequal"
    except BudgetError:
        out("budget-exceeded")
        return EXIT_BUDGET
    out(verdict)
    return EXIT_OK


def cmd_projective(s: Session, out) -> int:
    q = quotient_complex(s.salvetti)
    h = quotient_homology(q)
    out(q.render(h))
    out(h.betti_line())
    halves = [2 * c for c in q.count_by_dim()] == q.spherical_counts
    chi_half = 2 * q.euler_characteristic == s.homology.euler_characteristic
    out(f"check cell_counts_halve: {_ok(halves)}")
    out(f"check euler_characteristic_halves: {_ok(chi_half)}")
    out(f"check connected: {_ok(h.betti[0] == 1)}")
    ok = halves and chi_half and h.betti[0] == 1
    out(f"verdict: {_ok(ok)}")
    return EXIT_OK if ok else EXIT_VERDICT


def cmd_report(s: Session, out) -> int:
    a = s.arrangement
    val = validate(a)
    out(f"arrangement: n={a.n} ambient={a.ambient_dim} sphere_dim={a.sphere_dim}")
    out(val.render().splitlines()[0])
    if not val.ok:
        out(val.render())
        return EXIT_INPUT
    fp = s.faces
    out(f"faces by dimension: {_join(fp.count_by_dim())}")
    out(f"chambers: {len(fp.chambers)}")
    counts = s.salvetti.count_by_dim()
    out(f"salvetti cells by dimension: {_join(counts)}")
    h = s.homology
    out(h.betti_line())
    for line in h.lines():
        out(line)
    chi_ok = h.euler_characteristic == (-1) ** a.sphere_dim * len(fp.chambers)
    out(f"check euler_characteristic: {_ok(chi_ok)} ({h.euler_characteristic})")
    dec = decomposition_report(a, s.args.seed, fp, h)
    out(dec.render())
    ranks = mobius_rank_formula(a, fp, h)
    out(ranks.render())
    inv = s.groupoid.involution_check()
    out(inv.render())
    verdicts = {
        "euler_characteristic": chi_ok,
        "decomposition": dec.verdict,
        "ranks": ranks.verdict,
        "involution": inv.ok,
    }
    out("verdicts: " + " ".join(f"{k}={_ok(v)}" for k, v in verdicts.items()))
    ok = all(verdicts.values())
    out(f"overall: {_ok(ok)}")
    return EXIT_OK if ok else EXIT_VERDICT


COMMANDS = {
    "validate": cmd_validate,
    "faces": cmd_faces,
    "iposet": cmd_iposet,
    "salvetti": cmd_salvetti,
    "homology": cmd_homology,
    "decompose": cmd_decompose,
    "ranks": cmd_ranks,
    "word": cmd_word,
    "projective": cmd_projective,
    "report": cmd_report,
}


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="arrangement file or @fixture (E2, G3, P3, C3, S1n1..S1n4)")
    common.add_argument("--scan-limit", type=_positive, default=DEFAULT_SCAN_LIMIT, help="largest n for face enumeration")
    common.add_argument("--budget", type=_positive, default=DEFAULT_CLOSURE_BUDGET, help="state cap for positive closure")
    common.add_argument("--cache-dir", help=f"result cache directory (default: ${CACHE_ENV})")
    common.add_argument("--no-cache", action="store_true", help="ignore and do not write the cache")
    common.add_argument("--seed", type=int, default=0, help="offset for the generic equator search")
    common.add_argument("--export-dot", metavar="PATH", help="write the Salvetti cell poset as DOT")
    common.add_argument("--export-chains", metavar="PATH", help="write the Salvetti boundary matrices")

    parser = argparse.ArgumentParser(prog="spherearr", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="subcommand")
    for name in SUBCOMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "word":
            p.add_argument("words", nargs="*", help='two words, e.g. "++ ; +1 -2" (put -- before words starting with -)')
            p.add_argument("--quotient", action="store_true", help="decide equality in the projective quotient")
        if name == "homology":
            p.add_argument("--oracle", action="store_true", help="also compute order-complex homology and compare")
    return parser


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK

    def out(line: str):
        stdout.write(line + "\n")

    try:
        return COMMANDS[args.command](Session(args), out)
    except InputError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except BudgetError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_BUDGET
    except SphereArrError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_VERDICT


def main() -> None:
    sys.exit(run())
