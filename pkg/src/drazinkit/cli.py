"""Command-line front end.

Exit status: 0 when every check passes, 1 when a check fails, 2 on bad
input (parse errors, wrong shapes, hypotheses that do not hold).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass, field
from typing import Sequence

from .antitri import CASES, AntiTriangularBlocks, BranchReport, assemble, classify_and_solve
from .digraph import (adjacency, auto_bipartition, bipartite_blocks, bipartite_order, parse_digraph,
                      similarity_invariance_check)
from .errors import DrazinKitError, IndexTooLarge, MatrixParseError, VerificationFailed
from .exactmat import (Matrix, format_matrix, matrix_from_json, matrix_to_json, parse_matrix,
                       parse_matrix_lines, rank, split_blocks_text)
from .geninv import drazin, drazin_equations, is_one_inverse, one_inverse, one_inverse_family, rank_sequence
from .polyring import eval_at_matrix, format_expanded, format_factored, min_poly, split_lambda_power
from .suites import SUITES, run_suite
from .worked import reproduce

EXIT_OK, EXIT_CHECK, EXIT_INPUT = 0, 1, 2


@dataclass
class Report:
    command: str
    inputs: dict[str, str] = field(default_factory=dict)      # name -> sha256 of the raw bytes
    outputs: dict[str, object] = field(default_factory=dict)  # Matrix, str or int
    checks: list[tuple[str, bool]] = field(default_factory=list)
    text: list[str] = field(default_factory=list)             # extra human-readable lines

    @property
    def ok(self) -> bool:
        return all(ok for _, ok in self.checks)

    def add_checks(self, checks: dict[str, bool]) -> None:
        self.checks.extend(checks.items())

    def to_json(self) -> dict:
        def enc(v):
            if isinstance(v, Matrix):
                return matrix_to_json(v)
            if isinstance(v, (list, tuple)):
                return [enc(x) for x in v]
            return v
        return {"command": self.command, "inputs": self.inputs,
                "outputs": {k: enc(v) for k, v in self.outputs.items()},
                "checks": [{"claim": c, "pass": ok} for c, ok in self.checks],
                "ok": self.ok}

    def render(self) -> str:
        out = [f"# {self.command}"]
        out += [f"# input {name} sha256 {digest}" for name, digest in self.inputs.items()]
        for key, value in self.outputs.items():
            if isinstance(value, Matrix):
                out.append(f"{key}:")
                out.append(format_matrix(value).rstrip("\n"))
            else:
                out.append(f"{key}: {value}")
        out += self.text
        out += [f"check {'PASS' if ok else 'FAIL'}  {claim}" for claim, ok in self.checks]
        return "\n".join(out) + "\n"


# -- input --------------------------------------------------------------------------


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _digest(raw: bytes) -> str:
    return hashlib.sha256(raw).hexdigest()


def _load_matrix(rep: Report, path: str, name: str = "matrix") -> Matrix:
    raw = _read(path)
    rep.inputs[name] = _digest(raw)
    return parse_matrix(raw.decode("utf-8"))


def parse_blocks(text: str) -> AntiTriangularBlocks:
    """Three matrices A, B, C: blank-line separated text, or a JSON object with keys A, B, C."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
            return AntiTriangularBlocks(*(matrix_from_json(obj[k]) for k in "ABC"))
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise MatrixParseError(f"bad JSON block object: {exc}") from exc
    chunks = split_blocks_text(text)
    if len(chunks) != 3:
        raise MatrixParseError(f"expected 3 blank-line separated blocks (A, B, C), got {len(chunks)}")
    return AntiTriangularBlocks(*(parse_matrix_lines(c) for c in chunks))


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertex ids, got {text!r}") from None


# -- commands -----------------------------------------------------------------------


def cmd_index(args) -> Report:
    rep = Report("index")
    A = _load_matrix(rep, args.matrix)
    psi = min_poly(A)
    k, _ = split_lambda_power(psi)
    seq = rank_sequence(A, k + 1)
    rep.outputs["index"] = k
    rep.outputs["ranks"] = " ".join(map(str, seq))
    rep.outputs["minpoly"] = format_factored(psi)
    rep.checks.append(("rank(A^k) = rank(A^(k+1)) first at k = index",
                       seq[k] == seq[k + 1] and all(seq[j] != seq[j + 1] for j in range(k))))
    return rep


def cmd_minpoly(args) -> Report:
    rep = Report("minpoly")
    A = _load_matrix(rep, args.matrix)
    psi = min_poly(A)
    rep.outputs["minpoly"] = format_factored(psi)
    rep.outputs["expanded"] = format_expanded(psi)
    rep.outputs["index"] = split_lambda_power(psi)[0]
    rep.checks.append(("psi(A) = 0", eval_at_matrix(psi, A).is_zero()))
    return rep


def cmd_drazin(args) -> Report:
    rep = Report("drazin")
    A = _load_matrix(rep, args.matrix)
    d = drazin(A)
    rep.outputs["index"] = d.index
    rep.outputs["drazin"] = d.inverse
    rep.add_checks(drazin_equations(A, d.inverse, d.index))
    return rep


def cmd_group(args) -> Report:
    rep = Report("group")
    A = _load_matrix(rep, args.matrix)
    d = drazin(A)
    if d.index > 1:
        raise IndexTooLarge(f"matrix has index {d.index}; the group inverse needs index <= 1")
    X = d.inverse
    rep.outputs["index"] = d.index
    rep.outputs["group"] = X
    rep.checks += [("A X A = A", A @ X @ A == A), ("X A X = X", X @ A @ X == X), ("A X = X A", A @ X == X @ A)]
    return rep


def cmd_oneinv(args) -> Report:
    rep = Report("oneinv")
    A = _load_matrix(rep, args.matrix)
    X = one_inverse(A)
    if args.z:
        X = one_inverse_family(A, X, _load_matrix(rep, args.z, "Z"))
    rep.outputs["rank"] = rank(A)
    rep.outputs["one_inverse"] = X
    rep.checks.append(("A X A = A", is_one_inverse(A, X)))
    return rep


def _branch_report(rep: Report, br: BranchReport) -> None:
    rep.outputs["branch"] = br.branch.value
    rep.outputs["case"] = br.case.value
    rep.outputs["bounds"] = f"{br.lower_bound} <= i(M) <= {br.upper_bound}"
    rep.outputs["index"] = br.index
    if br.drazin is not None:
        rep.outputs["drazin"] = br.drazin
    rep.add_checks(br.checks)
    rep.text += [f"note: {n}" for n in br.notes]


def cmd_block(args) -> Report:
    rep = Report("block")
    raw = _read(args.blocks)
    rep.inputs["blocks"] = _digest(raw)
    blocks = parse_blocks(raw.decode("utf-8"))
    _branch_report(rep, classify_and_solve(blocks, args.branch))
    return rep


def cmd_digraph(args) -> Report:
    rep = Report("digraph")
    raw = _read(args.graph)
    rep.inputs["graph"] = _digest(raw)
    g = parse_digraph(raw)
    A = adjacency(g)
    rep.outputs["adjacency"] = A
    if args.bipartite:
        left = set(args.left) if args.left is not None else auto_bipartition(g, not args.unequal)
        rep.outputs["left"] = " ".join(map(str, sorted(left)))
        blocks = bipartite_blocks(g, left, require_equal=not args.unequal)
        _branch_report(rep, classify_and_solve(blocks))
        order = bipartite_order(g.n, left)
        reordered = Matrix([[A[i - 1, j - 1] for j in order] for i in order], cols=g.n)
        rep.checks.append(("assembled blocks equal the reordered adjacency", assemble(blocks) == reordered))
    else:
        d = drazin(A)
        rep.outputs["index"] = d.index
        rep.outputs["drazin"] = d.inverse
        rep.add_checks(drazin_equations(A, d.inverse, d.index))
    if args.perm is not None:
        rep.checks.append(("index and Drazin inverse invariant under relabelling",
                           similarity_invariance_check(g, args.perm)))
    return rep


def cmd_verify(args) -> tuple[int, str]:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    results = [run_suite(name, args.cases, args.seed) for name in names]
    ok = all(r.ok for r in results)
    if args.json:
        text = json.dumps({"command": "verify", "ok": ok, "suites": [r.to_json() for r in results]},
                          indent=2) + "\n"
    else:
        lines = [line for r in results for line in r.lines()]
        lines.append(f"{sum(r.ok for r in results)}/{len(results)} suites passed")
        text = "\n".join(lines) + "\n"
    return (EXIT_OK if ok else EXIT_CHECK), text


def cmd_examples(args) -> tuple[int, str]:
    ok, lines = reproduce()
    if args.json:
        text = json.dumps({"command": "examples", "ok": ok, "lines": lines}, indent=2) + "\n"
    else:
        text = "\n".join(lines) + "\n"
    return (EXIT_OK if ok else EXIT_CHECK), text


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured JSON output")
    p = argparse.ArgumentParser(prog="drazinkit", description="Exact Drazin, group and {1}-inverses.")
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn, helptext in (
            ("index", cmd_index, "Drazin index, rank sequence and minimal polynomial"),
            ("minpoly", cmd_minpoly, "minimal polynomial"),
            ("drazin", cmd_drazin, "Drazin inverse with the three defining checks"),
            ("group", cmd_group, "group inverse (index <= 1 only)")):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("matrix", help="matrix file ('-' for stdin)")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("oneinv", parents=[common], help="canonical {1}-inverse or a family member")
    sp.add_argument("matrix")
    sp.add_argument("--z", metavar="FILE", help="Z for A^- + Z - A^-AZAA^-")
    sp.set_defaults(func=cmd_oneinv)

    sp = sub.add_parser("block", parents=[common], help="anti-triangular [[A, B], [C, 0]]")
    sp.add_argument("blocks", help="file with A, B, C separated by blank lines")
    sp.add_argument("--branch", choices=sorted(CASES), help="force a case instead of auto-selection")
    sp.set_defaults(func=cmd_block)

    sp = sub.add_parser("digraph", parents=[common], help="weighted digraph adjacency matrices")
    sp.add_argument("graph", help="edge-list file")
    sp.add_argument("--bipartite", action="store_true", help="treat as [[0, B], [C, 0]]")
    sp.add_argument("--left", type=_int_list, help="left part, e.g. 1,3 (default: 2-colouring)")
    sp.add_argument("--unequal", action="store_true", help="allow parts of different sizes")
    sp.add_argument("--perm", type=_int_list, help="check invariance under this relabelling, e.g. 2,3,1")
    sp.set_defaults(func=cmd_digraph)

    sp = sub.add_parser("verify", parents=[common], help="run a seeded property suite")
    sp.add_argument("--suite", default="all", choices=["all"] + sorted(SUITES))
    sp.add_argument("--cases", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("examples", parents=[common], help="reproduce the six worked examples")
    sp.set_defaults(func=cmd_examples)
    return p


def run(argv: Sequence[str] | None = None) -> tuple[int, str, str]:
    """(exit status, stdout text, stderr text); the entry point prints these."""
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except VerificationFailed as exc:
        return EXIT_CHECK, "", f"drazinkit: check failed: {exc}\n"
    except (DrazinKitError, OSError, UnicodeDecodeError) as exc:
        return EXIT_INPUT, "", f"drazinkit: {type(exc).__name__}: {exc}\n"
    if isinstance(result, tuple):
        status, text = result
        return status, text, ""
    text = json.dumps(result.to_json(), indent=2) + "\n" if args.json else result.render()
    return (EXIT_OK if result.ok else EXIT_CHECK), text, ""


def main(argv: Sequence[str] | None = None) -> int:
    status, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
