"""Command-line interface.

Exit codes: 0 success, 1 property violation, 2 invalid input, 3 cap exceeded.
"""
from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import autgroup as ag
from . import category as cat
from . import checks
from . import idem
from . import spectral as sp
from .algebra import check_identities, isotope, perm_map, product_algebra
from .errors import InvalidInput, IsotopeError
from .field import splitting_modulus, splitting_set
from .intpoly import is_regular
from .perm import Permutation
from .report import (
    automorphism_section,
    dumps,
    fusion_section,
    render_markdown,
    report_passed,
    resolve_field,
    roots_dict,
    run_report,
)


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--perm", help='permutation in image notation, e.g. "2 3 1"')
    common.add_argument("--perm-cycles", help='permutation in cycle notation, e.g. "(1 2 3)(4)"')
    common.add_argument("--degree", type=int, help="degree for --perm-cycles when trailing fixed points are omitted")
    common.add_argument("--prime", default="auto", help="auto or an explicit prime")
    common.add_argument("--cap", type=int, default=idem.DEFAULT_CAP, help="brute-force point cap")
    common.add_argument("--format", choices=("json", "md"), default="json")
    common.add_argument("--out", help="write output here instead of stdout")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="innerisotope", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("admissible-prime", parents=[common], help="smallest admissible prime for σ")
    sub.add_parser("algebra", parents=[common], help="structure constants and identities")
    p = sub.add_parser("idempotents", parents=[common], help="list idempotents")
    p.add_argument("--oracle", choices=("formula", "chain", "brute"), default="formula")
    sub.add_parser("spectra", parents=[common], help="Peirce spectra and strata")
    sub.add_parser("fusion", parents=[common], help="fusion tables")
    sub.add_parser("quasigroup", parents=[common], help="idempotent product table")
    p = sub.add_parser("automorphisms", parents=[common], help="automorphism groups")
    p.add_argument("--quasigroup-bruteforce", action="store_true")
    p = sub.add_parser("regular", parents=[common], help="regularity certificate for n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--resultants", action="store_true")
    sub.add_parser("category-check", parents=[common], help="Φ/Ψ roundtrips")
    sub.add_parser("report", parents=[common], help="full report")
    p = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--check", action="append", help="run only this named acceptance check (repeatable)")
    p.add_argument("--no-acceptance", action="store_true")
    return parser


def resolve_perm(args) -> Permutation:
    if args.perm and args.perm_cycles:
        raise InvalidInput("give --perm or --perm-cycles, not both")
    if args.perm:
        return Permutation.parse(args.perm)
    if args.perm_cycles:
        return Permutation.from_cycles(args.perm_cycles, args.degree)
    raise InvalidInput("a permutation is required (--perm or --perm-cycles)")


def _generic_md(data, title: str) -> str:
    lines = [f"# {title}", ""]
    for key in sorted(data):
        value = data[key]
        if isinstance(value, list) and value and isinstance(value[0], list) and not isinstance(value[0][0], list):
            lines += [f"**{key}**", ""]
            lines += ["| " + " | ".join(map(str, row)) + " |" for row in value]
            lines.append("")
        else:
            lines.append(f"- **{key}**: {value}")
    return "\n".join(lines) + "\n"


def cmd_admissible_prime(args):
    sigma = resolve_perm(args)
    F = resolve_field(sigma, args.prime)
    parts = sigma.cycle_type()
    return {
        "cycle_type": list(parts),
        "splitting_set": list(splitting_set(parts)),
        "modulus": splitting_modulus(parts),
        "prime": F.p,
        "roots": roots_dict(sigma, F),
    }, True


def cmd_algebra(args):
    sigma = resolve_perm(args)
    F = resolve_field(sigma, args.prime)
    A = isotope(sigma, F)
    ids = check_identities(A)
    return {"sigma": list(sigma.images), "prime": F.p, "structure_constants": A.to_json(),
            "identities": ids.to_dict()}, True


def cmd_idempotents(args):
    sigma = resolve_perm(args)
    F = resolve_field(sigma, args.prime)
    A = isotope(sigma, F)
    T = idem.idempotents_formula(sigma, F)
    out = {"sigma": list(sigma.images), "prime": F.p, "oracle": args.oracle}
    ok = True
    if args.oracle == "formula":
        out.update(T.to_dict())
        for entry in out["idempotents"]:
            entry["regular"] = idem.is_regular_idempotent(A, entry["vector"])
        return out, True
    found = idem.idempotents_chain_blocks(sigma, F) if args.oracle == "chain" else idem.idempotents_bruteforce(A, args.cap)
    label = {v: e.label for v, e in zip(T.vectors, T.entries)}
    out["idempotents"] = [{"label": label.get(v), "vector": list(v)} for v in sorted(found)]
    ok = found == T.vector_set()
    out["matches_formula"] = ok
    return out, ok


def cmd_spectra(args):
    sigma = resolve_perm(args)
    F = resolve_field(sigma, args.prime)
    A = isotope(sigma, F)
    T = idem.idempotents_formula(sigma, F)
    rows = [{"idempotent_label": e.label, **sp.peirce(A, e.vector).to_dict()} for e in T.entries]
    strata = sp.strata_check(A, T)
    return {"sigma": list(sigma.images), "prime": F.p, "spectra": rows, "strata": strata}, all(
        s["matches"] for s in strata
    )


def cmd_fusion(args):
    sigma = resolve_perm(args)
    F = resolve_field(sigma, args.prime)
    A = isotope(sigma, F)
    T = idem.idempotents_formula(sigma, F)
    section = fusion_section(A, T, sigma, F)
    return {"sigma": list(sigma.images), "prime": F.p, **section}, section["verified"] is not False


def cmd_quasigroup(args):
    sigma = resolve_perm(args)
    F = resolve_field(sigma, args.prime)
    A = isotope(sigma, F)
    T = idem.idempotents_formula(sigma, F)
    q = idem.quasigroup_table(T, A)
    ok = q.closed and q.idempotent and q.commutative and q.medial
    if q.law_ok is not None:
        ok = ok and q.law_ok and q.latin
    return {"sigma": list(sigma.images), "prime": F.p, **q.to_dict()}, ok


def cmd_automorphisms(args):
    sigma = resolve_perm(args)
    F = resolve_field(sigma, args.prime)
    A = isotope(sigma, F)
    T = idem.idempotents_formula(sigma, F)
    idem.quasigroup_table(T, A)
    section = automorphism_section(A, T, sigma, quasigroup_bruteforce=args.quasigroup_bruteforce)
    ok = section.get("relations_ok") is not False
    if "quasigroup_bruteforce_order" in section:
        ok = ok and section["quasigroup_bruteforce_order"] == section["quasigroup_order"]
    return {"sigma": list(sigma.images), "prime": F.p, **section}, ok


def cmd_regular(args):
    cert = is_regular(args.n, resultants=args.resultants)
    return cert.to_dict(), True


def cmd_category_check(args):
    sigma = resolve_perm(args)
    F = resolve_field(sigma, args.prime)
    n = sigma.n
    CA = cat.CalibratedAssociative(product_algebra(n, F), np.ones(n, dtype=np.int64), perm_map(sigma))
    CM = cat.phi(CA)
    back = cat.psi(CM)
    ids = check_identities(back.algebra)
    T = idem.idempotents_formula(sigma, F)
    axes = [e.vector for e in T.entries if all(e.code)]
    results = {
        "phi_is_isotope": CM.algebra.same_as(isotope(sigma, F)),
        "psi_phi_identity": back.same_as(CA),
        "phi_psi_identity": cat.medial_roundtrip_check(CM),
        "psi_associative": ids.associative,
        "psi_unital": ids.unital,
        "calibration_independence": all(
            cat.calibration_independence(CM.algebra, a, b) is not None for a in axes for b in axes
        ),
    }
    return {"sigma": list(sigma.images), "prime": F.p, "checks": results}, all(results.values())


def cmd_report(args):
    sigma = resolve_perm(args)
    rep = run_report(sigma, args.prime, args.cap)
    return rep, report_passed(rep)


def cmd_verify(args):
    if args.check:
        results = checks.run_acceptance(args.check)
        return {"checks": [r.to_dict() for r in results]}, all(r.passed for r in results)
    status, records = checks.verify_all(args.n_max, args.cap, acceptance=not args.no_acceptance)
    return {"n_max": args.n_max, "status": status, "records": records}, status


COMMANDS = {
    "admissible-prime": cmd_admissible_prime,
    "algebra": cmd_algebra,
    "idempotents": cmd_idempotents,
    "spectra": cmd_spectra,
    "fusion": cmd_fusion,
    "quasigroup": cmd_quasigroup,
    "automorphisms": cmd_automorphisms,
    "regular": cmd_regular,
    "category-check": cmd_category_check,
    "report": cmd_report,
    "verify": cmd_verify,
}


def emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        try:
            sys.stdout.write(text)
            sys.stdout.flush()
        except BrokenPipeError:
            # reader went away (e.g. piped into head); silence the interpreter's flush at exit
            sys.stdout = open(os.devnull, "w")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        data, ok = COMMANDS[args.command](args)
    except IsotopeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    if args.format == "md":
        text = render_markdown(data) if args.command == "report" else _generic_md(data, args.command)
    else:
        text = dumps(data)
    emit(text, args.out)
    if isinstance(ok, bool):
        return 0 if ok else 1
    return int(ok)


if __name__ == "__main__":
    sys.exit(main())
