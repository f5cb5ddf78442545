"""JSON reports for every command, and replay checks that re-validate them.

Replay never re-factors anything: it multiplies factorizations back out,
re-evaluates the recorded constructions and re-checks each Bezout identity.
Every check contributes one ``(label, passed)`` pair.
"""

from __future__ import annotations

from math import gcd, prod

from .atoms import AtomCensus, predicted_atoms
from .core import BezoutCertificate, Factorization, canonical_associate, is_unit
from .divgroup import NOT_CHECKABLE, CensusReport, theorem419_census
from .errors import InvalidInput
from .euclid import EuclidState, PollackState, PolyValuePrime, poly_eval, validate_subgroup
from .radical import FAILS_WITH_WITNESS, HOLDS_ON_PANEL, RadicalReport
from .rings import RingDescriptor, RingElement
from .topo import ClosednessReport, PeriodicityReport

Check = tuple[str, bool]


def _certs_json(certs) -> list[dict]:
    return [c.to_json() for c in certs]


def _load_certs(objs) -> list[BezoutCertificate]:
    return [BezoutCertificate.from_json(o) for o in objs]


def _pair_checks(label: str, certs, prior, new) -> list[Check]:
    out = [(f"{label}: certificate count", len(certs) == len(prior))]
    for i, (c, f) in enumerate(zip(certs, prior)):
        out.append((f"{label}: certificate {i} pairs the right elements", c.a == f and c.b == new))
        out.append((f"{label}: certificate {i} identity", c.verify()))
    return out


def _flat_checks(all_certs, step_certs) -> list[Check]:
    flat = [c for group in step_certs for c in group]
    return [("certificate list matches steps", all_certs == flat)] + [
        (f"certificate {k} identity", c.verify()) for k, c in enumerate(all_certs)
    ]


# ---------------------------------------------------------------------------
# euclid


def euclid_results(state: EuclidState) -> tuple[dict, list[dict]]:
    steps = [
        {
            "y": s.y.to_json(),
            "x": s.x.to_json(),
            "factors": s.factorization.to_json(),
            "selected": s.selected.to_json(),
            "certificates": _certs_json(s.certificates),
        }
        for s in state.transcript
    ]
    results = {
        "ring": str(state.ring),
        "irreducibles": [str(f) for f in state.chosen],
        "chosen": [f.to_json() for f in state.chosen],
        "steps": steps,
    }
    return results, _certs_json(state.certificates)


def euclid_checks(results: dict, certificates: list) -> list[Check]:
    ring = RingDescriptor.parse(results["ring"])
    chosen = [RingElement.from_json(o) for o in results["chosen"]]
    steps = results["steps"]
    checks: list[Check] = [("step count", len(steps) == max(len(chosen) - 1, 0))]
    checks.append(("elements live in the stated ring", all(f.ring == ring for f in chosen)))
    step_certs = []
    for k, st in enumerate(steps):
        prior = chosen[: k + 1]
        y, x = RingElement.from_json(st["y"]), RingElement.from_json(st["x"])
        fac = Factorization.from_json(st["factors"])
        sel = RingElement.from_json(st["selected"])
        certs = _load_certs(st["certificates"])
        step_certs.append(certs)
        product = ring.one
        for f in prior:
            product = product * f
        checks += [
            (f"step {k + 1}: x = y*prod + 1", y * product + 1 == x),
            (f"step {k + 1}: factorization replays", fac.replay() == x),
            (f"step {k + 1}: selected is a listed factor", any(g == sel for g, _ in fac.factors)),
            (f"step {k + 1}: selected is appended", k + 1 < len(chosen) and chosen[k + 1] == sel),
        ]
        checks += _pair_checks(f"step {k + 1}", certs, prior, sel)
    checks += _flat_checks(_load_certs(certificates), step_certs)
    return checks


# ---------------------------------------------------------------------------
# pollack


def pollack_results(state: PollackState) -> tuple[dict, list[dict]]:
    steps = [
        {
            "x": s.x,
            "y": s.y,
            "sign": s.sign,
            "factors": s.factorization.to_json(),
            "selected": s.selected,
            "residue": s.residue,
            "certificates": _certs_json(s.certificates),
        }
        for s in state.transcript
    ]
    results = {
        "modulus": state.modulus,
        "subgroup": sorted(state.subgroup),
        "alpha": state.alpha,
        "beta": state.beta,
        "chosen": list(state.chosen),
        "steps": steps,
    }
    return results, _certs_json(state.certificates)


def pollack_checks(results: dict, certificates: list) -> list[Check]:
    N, alpha, beta = results["modulus"], results["alpha"], results["beta"]
    H = validate_subgroup(N, results["subgroup"])
    chosen = results["chosen"]
    checks: list[Check] = [
        ("alpha*beta = 1 mod N", alpha * beta % N == 1),
        ("alpha avoids H", alpha % N not in H),
        ("alpha*beta - 1 nonzero", alpha * beta != 1),
        ("step count", len(results["steps"]) == len(chosen)),
    ]
    step_certs = []
    for k, st in enumerate(results["steps"]):
        prior = chosen[:k]
        x, y, g = st["x"], st["y"], st["selected"]
        fac = Factorization.from_json(st["factors"])
        certs = _load_certs(st["certificates"])
        step_certs.append(certs)
        expected = (alpha * x + 1) * (alpha * beta - 1) * prod(prior) + alpha
        classes = st["sign"] % N
        for f, m in fac.factors:
            classes = classes * pow(f.payload, m, N) % N
        z_prior = [RingElement(fac.unit.ring, f) for f in prior]
        checks += [
            (f"step {k + 1}: y = P(x)", y == expected),
            (f"step {k + 1}: factorization replays", fac.replay().payload == y),
            (f"step {k + 1}: sign recorded", fac.unit.payload == st["sign"]),
            (f"step {k + 1}: selected is a listed factor", any(f.payload == g for f, _ in fac.factors)),
            (f"step {k + 1}: selected is appended", k < len(chosen) and chosen[k] == g),
            (f"step {k + 1}: residue", st["residue"] == g % N),
            (f"step {k + 1}: class avoids H", g % N not in H),
            (f"step {k + 1}: gcd with N", gcd(g, N) == 1),
            (f"step {k + 1}: gcd with alpha", gcd(g, alpha) == 1),
            (f"step {k + 1}: classes multiply to alpha", classes == alpha % N),
        ]
        checks += _pair_checks(f"step {k + 1}", certs, z_prior, RingElement(fac.unit.ring, g))
    checks += _flat_checks(_load_certs(certificates), step_certs)
    return checks


# ---------------------------------------------------------------------------
# polynomial values


def polyprimes_results(coeffs, runs: list[PolyValuePrime]) -> tuple[dict, list]:
    steps = []
    known: list[int] = []
    for r in runs:
        steps.append({"known": list(known), "prime": r.prime, "M": r.M, "n": r.n, "value": r.value})
        known.append(r.prime)
    return {"poly": list(coeffs), "primes": known, "steps": steps}, []


def polyprimes_checks(results: dict, certificates: list) -> list[Check]:
    f = results["poly"]
    checks: list[Check] = []
    for k, st in enumerate(results["steps"]):
        p = st["prime"]
        checks += [
            (f"step {k + 1}: known list", st["known"] == results["primes"][:k]),
            (f"step {k + 1}: value = f(n)", poly_eval(f, st["n"]) == st["value"]),
            (f"step {k + 1}: prime divides value", st["value"] % p == 0),
            (f"step {k + 1}: prime is new", p not in st["known"]),
        ]
    return checks


# ---------------------------------------------------------------------------
# atoms


def atoms_results(census: AtomCensus) -> tuple[dict, list]:
    return census.to_json(), []


def atoms_checks(results: dict, certificates: list) -> list[Check]:
    ring = RingDescriptor.parse(results["ring"])
    reps = [RingElement.from_json(o["representative"]) for o in results["orbits"]]
    impl = ring.impl
    canon = [canonical_associate(r)[1] for r in reps]
    checks: list[Check] = [
        ("predicted count", results["predicted"] == predicted_atoms(ring.q, ring.d, ring.e)),
        ("observed = predicted", results["observed"] == results["predicted"] == len(reps)),
        ("orbit sizes sum to total", sum(o["size"] for o in results["orbits"]) == results["irreducibles_total"]),
        ("representatives irreducible", all(ring.e <= impl.valuation(r.payload) < 2 * ring.e for r in reps)),
        ("representatives pairwise non-associate", len(set(canon)) == len(canon)),
    ]
    if results["truncation_stable"] is not None:
        checks.append(("stable at N+1", results["truncation_stable"] is True))
    return checks


# ---------------------------------------------------------------------------
# radical


def radical_results(report: RadicalReport) -> tuple[dict, list]:
    return report.to_json(), []


def radical_checks(results: dict, certificates: list) -> list[Check]:
    ring = RingDescriptor.parse(results["ring"])
    if results["condition_e"] == HOLDS_ON_PANEL:
        checks = []
        for k, w in enumerate(results["panel"]):
            x, y, v = (RingElement.from_json(w[key]) for key in ("x", "y", "value"))
            checks += [
                (f"panel {k}: value = y*x + 1", y * x + 1 == v),
                (f"panel {k}: value is a nonzero nonunit", bool(v) and not is_unit(v)),
            ]
        return checks
    impl = ring.impl
    members = [RingElement.from_json(o) for o in results["radical_members"]]
    checks = [
        ("members are nonunits", all(not impl.is_unit(m.payload) for m in members)),
        ("member count = nonunit count", len(members) == impl.size // ring.q),
        ("1 + member is a unit", all(impl.is_unit((m + 1).payload) for m in members)),
        ("reported equality with nonunits", results["equals_nonunits"] is True),
        ("reported 1 + J in units", results["one_plus_radical_in_units"] is True),
    ]
    if results["condition_e"] == FAILS_WITH_WITNESS:
        w = RingElement.from_json(results["witness"])
        checks.append(("witness is a nonzero radical member", bool(w) and w in members))
    return checks


# ---------------------------------------------------------------------------
# topology


def periodicity_results(report: PeriodicityReport) -> tuple[dict, list]:
    return report.to_json(), []


def periodicity_checks(results: dict, certificates: list) -> list[Check]:
    ps = results["irreducibles"]
    checks: list[Check] = [
        ("period", results["period"] == prod(ps)),
        ("periodicity verified", results["verified"] is True),
        ("coset check", results["coset_check"] is True),
    ]
    for x, p in results["external_primes"].items():
        x = int(x)
        checks += [
            (f"{x}: external prime divides", x % p == 0),
            (f"{x}: external prime is outside the list", p not in ps),
            (f"{x}: in the coset 1 + period*Z", (x - 1) % results["period"] == 0),
        ]
    return checks


def golomb_results(report: ClosednessReport) -> tuple[dict, list]:
    return report.to_json(), []


def golomb_checks(results: dict, certificates: list) -> list[Check]:
    p = results["prime"]
    lo, hi = results["window"]
    checks: list[Check] = [("closedness verified", results["verified"] is True)]
    listed = []
    for hood in results["neighborhoods"]:
        x = int(hood.split(" + ")[0])
        listed.append(x)
        checks.append((f"{x}: coprime to {p}", gcd(x, p) == 1))
    expected = [x for x in range(lo, hi + 1) if x % p]
    checks.append(("every complement point has a neighborhood", listed == expected))
    return checks


# ---------------------------------------------------------------------------
# divisibility groups


def divgroup_results(reports: list[CensusReport]) -> tuple[dict, list]:
    return {"censuses": [r.to_json() for r in reports]}, []


def divgroup_checks(results: dict, certificates: list) -> list[Check]:
    checks: list[Check] = []
    for c in results["censuses"]:
        tag = f"({c['alpha']},{c['beta']},{c['gamma']})"
        fresh = theorem419_census(c["alpha"], c["beta"], c["gamma"]).to_json()
        checks.append((f"{tag}: report matches rebuilt census", fresh == c))
        for claim, v in sorted(c["claims"].items()):
            if v != NOT_CHECKABLE:
                checks.append((f"{tag}: claim {claim}", v is True))
    return checks


CHECKERS = {
    "euclid": euclid_checks,
    "pollack": pollack_checks,
    "polyprimes": polyprimes_checks,
    "atoms": atoms_checks,
    "radical": radical_checks,
    "topo-periodicity": periodicity_checks,
    "topo-golomb": golomb_checks,
    "divgroup": divgroup_checks,
}


def replay(report: dict) -> list[Check]:
    """All checks for a previously emitted report."""
    try:
        checker = CHECKERS[report["command"]]
        return checker(report["results"], report["certificates"])
    except (KeyError, TypeError, AttributeError, IndexError) as exc:
        raise InvalidInput(f"malformed report: {exc!r}") from exc
