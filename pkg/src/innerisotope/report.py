"""Deterministic JSON / markdown reports for one permutation."""
from __future__ import annotations

import json
import math

import numpy as np

from . import autgroup as ag
from . import idem
from . import spectral as sp
from .algebra import check_identities, isotope
from .checks import LIFT_CAP, sigma_checks
from .errors import CapExceeded
from .field import PrimeField, admissible_prime, check_admissible, cycle_roots
from .intpoly import is_regular
from .perm import Permutation

SCHEMA_VERSION = 1


def _plain(obj):
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (set, frozenset, tuple)):
        return list(obj)
    raise TypeError(f"not serializable: {type(obj).__name__}")


def dumps(data) -> str:
    """Stable serialization: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False, default=_plain) + "\n"


def resolve_field(sigma: Permutation, prime: int | str | None) -> PrimeField:
    if prime in (None, "auto"):
        return admissible_prime(sigma.cycle_type())
    F = PrimeField(int(prime))
    check_admissible(sigma.cycle_type(), F)
    return F


def roots_dict(sigma: Permutation, F: PrimeField) -> dict[str, int]:
    out = {}
    for s, r in cycle_roots(sigma.cycle_type(), F).items():
        out[str(s)] = r["eps"]
        out[str(2**s - 1)] = r["zeta"]
    return out


def fusion_section(A, T, sigma: Permutation, F: PrimeField) -> dict:
    single = len(T.cycle_lengths) == 1
    tables = {}
    verdicts = []
    for e in T.entries:
        if single and not any(e.code):
            continue
        ft = sp.fusion_table(A, e.vector)
        if single:
            eps = cycle_roots([sigma.n], F)[sigma.n]["eps"]
            sp.check_cyclic_law(ft, eps, F.p, sigma.n)
        elif sigma.is_identity():
            sp.check_peirce_law(ft)
        if ft.law_ok is not None:
            verdicts.append(ft.law_ok)
        tables[e.label] = ft.to_dict()
    law = "cyclic" if single else ("peirce" if sigma.is_identity() else None)
    return {"law": law, "verified": all(verdicts) if verdicts else None, "tables": tables}


def automorphism_section(A, T, sigma: Permutation, quasigroup_bruteforce: bool = True) -> dict:
    n = sigma.n
    if len(T.cycle_lengths) == 1:
        N = 2**n - 1
        autos = ag.algebra_autos(A, T)
        g = ag.group_structure([a.affine for a in autos])
        out = {
            "method": "affine lifts",
            "candidates": len(ag.affine_autos(N)),
            "algebra_order": g.order,
            "abelian": g.abelian,
            "relations_ok": g.relations_ok,
            "isomorphism_type": g.isomorphism_type,
            "quasigroup_order": len(ag.affine_autos(N)),
            "accepted": [a.to_dict() for a in autos],
        }
        if quasigroup_bruteforce and math.factorial(N) <= ag.DEFAULT_QUASIGROUP_CAP:
            brute = ag.quasigroup_autos_bruteforce(idem.residue_table(T))
            out["quasigroup_bruteforce_order"] = len(brute)
        return out
    count = ag.candidate_count(A, T)
    if count > LIFT_CAP:
        return {"method": "idempotent lifts", "candidates": count, "algebra_order": None, "cap_exceeded": True}
    autos = ag.automorphisms_by_lifting(A, T)
    g = ag.matrix_group_structure([a.matrix for a in autos], A.p)
    return {
        "method": "idempotent lifts",
        "candidates": count,
        "algebra_order": g.order,
        "abelian": g.abelian,
        "relations_ok": None,
        "accepted": [a.to_dict() for a in autos],
    }


def regularity_section(sigma: Permutation) -> dict:
    out = {}
    for s in sorted(set(sigma.cycle_type())):
        if s < 2:
            continue
        cert = is_regular(s)
        out[str(s)] = {"status": cert.status, "witnesses": [w.to_dict() for w in cert.witnesses]}
    return out


def run_report(sigma: Permutation, prime=None, cap: int = idem.DEFAULT_CAP) -> dict:
    F = resolve_field(sigma, prime)
    A = isotope(sigma, F)
    T = idem.idempotents_formula(sigma, F)
    q = idem.quasigroup_table(T, A)
    points = F.p**sigma.n
    brute = {"points": points, "cap": cap, "performed": points <= cap}
    if points <= cap:
        brute["agrees"] = idem.idempotents_bruteforce(A, cap) == T.vector_set()
    spectra = []
    for e in T.entries:
        pd = sp.peirce(A, e.vector)
        spectra.append({"label": e.label, **pd.to_dict()})
    checks = sigma_checks(sigma, F, cap)
    return {
        "schema_version": SCHEMA_VERSION,
        "n": sigma.n,
        "sigma": list(sigma.images),
        "cycles": sigma.cycles(),
        "cycle_type": list(sigma.cycle_type()),
        "prime": F.p,
        "roots": roots_dict(sigma, F),
        "identities": check_identities(A).to_dict(),
        "idempotents": [
            {
                "label": e.label,
                "vector": list(e.vector),
                "code": list(e.code),
                "residues": list(e.residues),
                "regular": idem.is_regular_idempotent(A, e.vector),
            }
            for e in T.entries
        ],
        "brute_force": brute,
        "quasigroup_table": q.to_dict(),
        "strata": sp.strata_check(A, T),
        "spectra": spectra,
        "fusion": fusion_section(A, T, sigma, F),
        "automorphisms": automorphism_section(A, T, sigma),
        "regularity": regularity_section(sigma),
        "checks": [c.to_dict() for c in checks],
    }


def report_passed(report: dict) -> bool:
    return all(c["pass"] for c in report["checks"])


def _md_table(header, rows) -> list[str]:
    lines = ["| " + " | ".join(map(str, header)) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(map(str, r)) + " |" for r in rows]
    return lines


def render_markdown(report: dict) -> str:
    r = report
    out = [
        f"# Isotope report for σ = {r['sigma']}",
        "",
        f"- cycle type: {r['cycle_type']}",
        f"- prime: {r['prime']}",
        f"- roots of unity: {r['roots']}",
        f"- identities: commutative={r['identities']['commutative']}, "
        f"associative={r['identities']['associative']}, medial={r['identities']['medial']}",
        "",
        "## Idempotents",
        "",
    ]
    out += _md_table(
        ["label", "vector", "code", "regular"],
        [[i["label"], i["vector"], i["code"], i["regular"]] for i in r["idempotents"]],
    )
    q = r["quasigroup_table"]
    out += ["", "## Idempotent product table", ""]
    out += _md_table(["∗"] + q["labels"], [[lab] + row for lab, row in zip(q["labels"], q["table"])])
    out += [
        "",
        f"Latin on nonzero part: {q['latin']}; idempotent: {q['idempotent']}; "
        f"commutative: {q['commutative']}; medial: {q['medial']}; ⊛ law: {q['law_ok']}",
        "",
        "## Strata",
        "",
    ]
    out += _md_table(
        ["α", "char poly", "matches", "labels"],
        [[s["alpha"], s["char_poly_text"], s["matches"], " ".join(s["labels"])] for s in r["strata"]],
    )
    f = r["fusion"]
    out += ["", f"## Fusion (law: {f['law']}, verified: {f['verified']})", ""]
    for label, table in f["tables"].items():
        out.append(f"Axis {label}:")
        out.append("")
        out += _md_table(
            ["λ", "μ", "products lie in", "equals"],
            [[e["pair"][0], e["pair"][1], e["contained_in"], e["equals"]] for e in table["entries"]],
        )
        out.append("")
    a = r["automorphisms"]
    out += [
        "## Automorphisms",
        "",
        f"- method: {a['method']}",
        f"- algebra order: {a.get('algebra_order')}",
        f"- abelian: {a.get('abelian')}",
        f"- relations: {a.get('relations_ok')}",
        f"- quasigroup order: {a.get('quasigroup_order')}",
        "",
        "## Checks",
        "",
    ]
    out += _md_table(["check", "pass"], [[c["name"], c["pass"]] for c in r["checks"]])
    return "\n".join(out) + "\n"
