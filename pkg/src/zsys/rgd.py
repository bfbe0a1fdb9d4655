"""Computational verification of the root-group-data axioms for the two matrix
examples, over a bounded root range.

RGD1, RGD2 and RGD6 are checked by exact matrix arithmetic; RGD5 holds by
construction (the ambient group is defined as the group the root groups and
the torus generate); RGD4 concerns membership in an infinitely generated
subgroup and is reported out of scope rather than approximated.  The
reflection axiom RGD3 is verified for the standard example only, where the
classical rank-one element v(-1/lam) u(lam) v(-1/lam) is available; the
unitary example is reported "not checked".
"""

from __future__ import annotations

from .matgroup import StandardExample, commutator
from .rootsystem import Root, alpha, negate, reflect


def _range_roots(K: int):
    for z in range(-K, K + 1):
        for eps in (1, -1):
            yield Root(z, eps)


def rgd_check(example, K: int) -> dict:
    """Axiom report over the root range [-K, K]."""
    if K < 1:
        raise ValueError("root range K must be at least 1")
    p = example.p
    units = range(1, p)
    checks = {}

    witness = None
    for root in _range_roots(K):
        if example.root_generator(root, 1).is_identity():
            witness = {"root": list(root)}
            break
    checks["RGD1"] = {"pass": witness is None}
    if witness:
        checks["RGD1"]["witness"] = witness

    fail = None
    samples = []
    for z in range(-K, K + 1):
        for z2 in range(z + 1, K + 1):
            for eps in (1, -1):
                for lam in units:
                    for mu in units:
                        a = example.root_generator(Root(z, eps), lam)
                        b = example.root_generator(Root(z2, eps), mu)
                        c = commutator(a, b)
                        try:
                            if eps == 1:
                                vec = example.normal_form(c, z + 1, z2 - 1)
                            else:
                                vec = example.normal_form_negative(c, z + 1, z2 - 1)
                        except ValueError as err:
                            fail = {
                                "z": z, "z2": z2, "eps": eps,
                                "lam": lam, "mu": mu, "error": str(err),
                            }
                            break
                        word = {z + 1 + k: e for k, e in enumerate(vec) if e}
                        if word and lam == 1 and mu == 1 and len(samples) < 8:
                            samples.append({"z": z, "z2": z2, "eps": eps, "word": word})
                    if fail:
                        break
                if fail:
                    break
            if fail:
                break
        if fail:
            break
    checks["RGD2"] = {"pass": fail is None, "interior_words": samples}
    if fail:
        checks["RGD2"]["witness"] = fail

    if isinstance(example, StandardExample):
        rgd3_pass = True
        rgd3_witness = None
        for i in (0, 1):
            for lam in units:
                _, rep = rgd3_m_map(example, i, lam, K)
                if not rep["pass"]:
                    rgd3_pass = False
                    rgd3_witness = {"i": i, "lam": lam, "report": rep}
                    break
            if not rgd3_pass:
                break
        checks["RGD3"] = {"pass": rgd3_pass}
        if rgd3_witness:
            checks["RGD3"]["witness"] = rgd3_witness
    else:
        checks["RGD3"] = {
            "status": "not checked",
            "reason": "no reflection-element recipe is implemented for this family",
        }

    checks["RGD4"] = {
        "status": "out of scope",
        "reason": "membership in an infinitely generated subgroup is not decidable here",
    }
    checks["RGD5"] = {
        "pass": True,
        "note": "holds by construction: the group is defined as generated by the root groups",
    }

    witness = None
    for root in _range_roots(K):
        for lam in units:
            g = example.root_generator(root, 1)
            h = example.h(lam)
            image = h.inv() * g * h
            matched = example.root_of(image)
            if matched is None or matched[0] != root:
                witness = {"root": list(root), "lam": lam}
                break
        if witness:
            break
    checks["RGD6"] = {"pass": witness is None}
    if witness:
        checks["RGD6"]["witness"] = witness

    graded = [c for c in checks.values() if "pass" in c]
    return {
        "example": example.tag,
        "p": p,
        "K": K,
        "checks": checks,
        "pass": all(c["pass"] for c in graded),
    }


def rgd3_m_map(example: StandardExample, i: int, lam: int, K: int):
    """Build the reflection element m = v u v with u the simple-root generator
    of parameter lam and v the opposite-root generator of parameter -1/lam;
    verify that conjugation by m permutes root groups exactly as the ladder
    reflection, and that quotients of two such elements land in the torus."""
    if not isinstance(example, StandardExample):
        raise ValueError("reflection elements are implemented for the standard example only")
    if i not in (0, 1):
        raise ValueError("simple root index must be 0 or 1")
    p = example.p
    if lam % p == 0:
        raise ValueError("reflection parameter must be nonzero")
    a = alpha(i)
    u = example.root_generator(a, lam)
    v = example.root_generator(negate(a), (-example.fp.inv(lam)) % p)
    m = v * u * v

    action_ok = True
    action_witness = None
    for root in _range_roots(K):
        for mu in range(1, p):
            g = example.root_generator(root, mu)
            image = m * g * m.inv()
            matched = example.root_of(image)
            if matched is None or matched[0] != reflect(i, root):
                action_ok = False
                action_witness = {
                    "root": list(root),
                    "mu": mu,
                    "expected": list(reflect(i, root)),
                    "got": None if matched is None else list(matched[0]),
                }
                break
        if not action_ok:
            break

    torus_ok = True
    torus_witness = None
    for lam2 in range(1, p):
        u2 = example.root_generator(a, lam2)
        v2 = example.root_generator(negate(a), (-example.fp.inv(lam2)) % p)
        m2 = v2 * u2 * v2
        if not example.in_torus(m.inv() * m2):
            torus_ok = False
            torus_witness = {"lam": lam, "lam2": lam2}
            break

    report = {
        "pass": action_ok and torus_ok,
        "action_matches_reflection": action_ok,
        "quotients_in_torus": torus_ok,
    }
    if action_witness:
        report["action_witness"] = action_witness
    if torus_witness:
        report["torus_witness"] = torus_witness
    return m, report
