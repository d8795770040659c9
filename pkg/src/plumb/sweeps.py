"""Exhaustive sweeps over tree, slalom and spiral corpora.

Every sweep returns a ``SweepReport`` whose content depends only on its
arguments, so reports can be diffed across runs. Failures carry the
canonical code of the offending object.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

import numpy as np

from plumb import __version__, linalg, polynomials
from plumb.coxeter import bicolored_coxeter, classify_spectrum, monodromy_correspondence_check
from plumb.decompose import case5_tree, lemma1_decompose, verify_certificate
from plumb.forms import (
    seifert_matrix,
    spiral_form,
    spiral_reduction,
    symmetrized_form,
    upper_lift,
)
from plumb.omega import (
    signature_profile,
    verify_jump_nullity,
    verify_lemma_B,
    verify_prop_D,
    verify_theorem_A,
)
from plumb.smith import seifert_pencil, smith_normal_form
from plumb.trees import (
    Tree,
    canonical_code,
    enumerate_planted_trees,
    free_tree_levels,
    glue,
    planted_code,
    random_tree,
    slalom_transform,
)

TREE_CHECKS = ("thm1", "cert", "small5", "cor1", "acampo", "thmA", "propD", "lemmaB", "monodromy")


@dataclass
class SweepReport:
    corpus: dict
    records: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)
    version: str = __version__

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "corpus": self.corpus,
            "records": self.records,
            "summary": self.summary,
            "failures": self.failures,
            "version": self.version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=True)

    def to_csv(self) -> str:
        if not self.records:
            return ""
        keys = list(self.records[0])
        for r in self.records[1:]:
            keys += [k for k in r if k not in keys]
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        for r in self.records:
            w.writerow({k: _cell(v) for k, v in r.items()})
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"corpus: {json.dumps(self.corpus, sort_keys=True)}"]
        for k in sorted(self.summary):
            lines.append(f"{k}: {json.dumps(self.summary[k], sort_keys=True)}")
        if self.failures:
            lines.append(f"FAILURES ({len(self.failures)}):")
            lines += [f"  {json.dumps(f, sort_keys=True)}" for f in self.failures]
        else:
            lines.append("all checks passed")
        return "\n".join(lines)

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unknown format {fmt!r}")


def _cell(v):
    return json.dumps(v, sort_keys=True) if isinstance(v, (dict, list)) else v


def _ratio(a: int, b: int) -> str:
    return str(Fraction(a, b))


def four_ball_lower(sigma: int) -> int:
    """Lower bound |sigma|/2 for the four-ball genus, rounded up."""
    return -(-abs(sigma) // 2)


def _tally(summary: dict, check: str, ok: bool):
    slot = summary.setdefault("checks", {}).setdefault(check, {"pass": 0, "fail": 0})
    slot["pass" if ok else "fail"] += 1


# --------------------------------------------------------------------------
# free trees


def _tree_record(t: Tree, checks: set[str]) -> tuple[dict, dict[str, bool]]:
    n = t.vertex_count
    sigma = symmetrized_form(t).signature
    rec: dict = {"code": canonical_code(t), "b1": n, "sigma": sigma,
                 "four_ball_lower": four_ball_lower(sigma)}
    flags: dict[str, bool] = {}
    if "thm1" in checks:
        flags["thm1"] = 3 * sigma >= 2 * n
    if "cert" in checks:
        cert = lemma1_decompose(t)
        bound = cert.certified_lower_bound
        rec["cert_bound"] = bound
        rec["cert_cases"] = [s.case_id for s in cert.steps]
        flags["cert"] = (bound <= sigma and cert.meets_two_thirds(n) and not cert.unresolved
                         and verify_certificate(t, cert))
    if "small5" in checks and n <= 5:
        flags["small5"] = sigma in (n, 4)
    if checks & {"cor1", "acampo"}:
        spec = classify_spectrum(bicolored_coxeter(t))
        rec["circle_count"] = spec.circle_count
        rec["positive_real_count"] = spec.positive_real_count
        rec["other_count"] = spec.other_count
        if "cor1" in checks:
            flags["cor1"] = 3 * spec.circle_count >= 2 * n
        if "acampo" in checks:
            flags["acampo"] = spec.other_count == 0
    a = seifert_matrix(t).tolist()
    if "thmA" in checks:
        ta = verify_theorem_A(a)
        rec["alexander_circle_roots"] = ta.circle_roots
        flags["thmA"] = ta.passed
    factors = None
    if checks & {"propD", "lemmaB"}:
        factors = smith_normal_form(seifert_pencil(a))
    if "propD" in checks:
        profile = signature_profile(a)
        rec["jumps"] = list(profile.jumps)
        endpoint = profile.order_at_minus_one > 0 or profile.plateau_values[-1] == profile.sigma_at_minus_one
        first = abs(profile.plateau_values[0]) <= profile.order_at_one
        flags["propD"] = (verify_prop_D(a, profile).passed and endpoint and first
                          and verify_jump_nullity(a, profile, factors).passed)
    if "lemmaB" in checks:
        lb = verify_lemma_B(a, factors)
        rec["order_exceeds_nullity"] = any(i.order > i.nullity for i in lb.items)
        flags["lemmaB"] = lb.passed
    if "monodromy" in checks:
        flags["monodromy"] = monodromy_correspondence_check(t)
    rec["flags"] = flags
    return rec, flags


def sweep_trees(max_n: int, checks: Iterable[str] = ("thm1",)) -> SweepReport:
    checks = set(checks)
    unknown = checks - set(TREE_CHECKS)
    if unknown:
        raise ValueError(f"unknown check(s): {', '.join(sorted(unknown))}")
    if not checks:
        raise ValueError("no checks selected")
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    report = SweepReport(corpus={"family": "free trees", "min_n": 1, "max_n": max_n,
                                 "checks": sorted(checks, key=TREE_CHECKS.index)})
    counts = {}
    worst = None
    equality = []
    order_gap = 0
    for level in free_tree_levels(max_n):
        for t in level:
            rec, flags = _tree_record(t, checks)
            report.records.append(rec)
            n = t.vertex_count
            counts[n] = counts.get(n, 0) + 1
            for name in sorted(flags, key=TREE_CHECKS.index):
                _tally(report.summary, name, flags[name])
                if not flags[name]:
                    report.failures.append({"code": rec["code"], "check": name, "b1": n,
                                            "sigma": rec["sigma"]})
            key = Fraction(rec["sigma"], n)
            if worst is None or key < worst[0]:
                worst = (key, rec["code"])
            if 3 * rec["sigma"] == 2 * n:
                equality.append(rec["code"])
            order_gap += bool(rec.get("order_exceeds_nullity"))
    report.summary["trees_per_n"] = {str(k): v for k, v in sorted(counts.items())}
    report.summary["min_sigma_over_b1"] = {"ratio": str(worst[0]), "code": worst[1]}
    report.summary["two_thirds_equality"] = equality
    if "lemmaB" in checks:
        report.summary["trees_with_order_above_nullity"] = order_gap
    return report


# --------------------------------------------------------------------------
# slalom trees


def sweep_slalom(max_planted_n: int) -> SweepReport:
    if max_planted_n < 2:
        raise ValueError("max_planted_n must be at least 2")
    report = SweepReport(corpus={"family": "slalom trees", "min_planted_n": 2,
                                 "max_planted_n": max_planted_n})
    worst = None
    for n in range(2, max_planted_n + 1):
        for p in enumerate_planted_trees(n):
            s = slalom_transform(p)
            sigma = symmetrized_form(s).signature
            b1 = s.vertex_count
            ok = 4 * sigma >= 3 * b1
            rec = {"planted": planted_code(p), "planted_n": n, "code": canonical_code(s),
                   "b1": b1, "sigma": sigma, "ratio": _ratio(sigma, b1),
                   "four_ball_lower": four_ball_lower(sigma), "flags": {"thm2": ok}}
            report.records.append(rec)
            _tally(report.summary, "thm2", ok)
            if not ok:
                report.failures.append({"code": rec["code"], "planted": rec["planted"],
                                        "check": "thm2", "b1": b1, "sigma": sigma})
            if worst is None or Fraction(sigma, b1) < worst[0]:
                worst = (Fraction(sigma, b1), rec["planted"])
    report.summary["min_sigma_over_b1"] = {"ratio": str(worst[0]), "planted": worst[1]}
    report.summary["largest_b1"] = max(r["b1"] for r in report.records)
    return report


# --------------------------------------------------------------------------
# spiral divides


def reduction_pattern_ok(m: np.ndarray) -> bool:
    """Diagonal (-3, 1, 2, ..., 2), zero first off-diagonal, 1 on the second, zero elsewhere."""
    n = m.shape[0]
    expected = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        expected[i, i] = -3 if i == 0 else (1 if i == 1 else 2)
        if i + 2 < n:
            expected[i, i + 2] = expected[i + 2, i] = 1
    return np.array_equal(m, expected)


def sweep_spiral(max_n: int, reduction_max_n: int = 50) -> SweepReport:
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    report = SweepReport(corpus={"family": "spiral divides", "min_n": 1, "max_n": max_n,
                                 "reduction_max_n": min(max_n, reduction_max_n)})
    for n in range(1, max_n + 1):
        s = spiral_form(n)
        sigma = s.signature
        det = s.determinant()
        flags = {"sigma_two": sigma == 2, "det_sign": (det > 0) == (n % 2 == 1) and det != 0}
        rec = {"n": n, "b1": 2 * n, "sigma": sigma, "det_sign": 1 if det > 0 else -1}
        if n <= reduction_max_n:
            red = spiral_reduction(n)
            red_det = linalg.determinant(red.tolist())
            flags["reduction_pattern"] = reduction_pattern_ok(red)
            flags["reduction_negative"] = red_det < 0
            rec["reduction_det"] = int(red_det)
        rec["flags"] = flags
        report.records.append(rec)
        for name, ok in flags.items():
            _tally(report.summary, name, ok)
            if not ok:
                report.failures.append({"n": n, "check": name})
    return report


def spiral_theorem_A(max_n: int) -> SweepReport:
    """|sigma| against the circle zeros of Delta for the upper triangular lift of each spiral form."""
    report = SweepReport(corpus={"family": "spiral divides, upper triangular lift", "max_n": max_n})
    for n in range(1, max_n + 1):
        ta = verify_theorem_A(upper_lift(spiral_form(n)).tolist())
        report.records.append({"n": n, "sigma": ta.sigma, "circle_roots": ta.circle_roots,
                               "flags": {"thmA": ta.passed}})
        _tally(report.summary, "thmA", ta.passed)
        if not ta.passed:
            report.failures.append({"n": n, "check": "thmA"})
    return report


# --------------------------------------------------------------------------
# random plumbing matrices


def random_plumbing_matrix(steps: int, rng: random.Random) -> list[list[int]]:
    """Seifert matrix of an iterated bordering by positive Hopf bands.

    Each step appends a basis curve with linking 1 with itself and couplings
    l (below) and u = l + e (above) to the previous curves, e in {-1, 0, 1};
    the symmetrized form gains a new row l + u and diagonal entry 2.
    """
    a = [[1]]
    for _ in range(steps):
        d = len(a)
        low = [rng.randint(-1, 1) for _ in range(d)]
        up = [x + rng.randint(-1, 1) for x in low]
        a = [row + [up[i]] for i, row in enumerate(a)] + [low + [1]]
    return a


def random_theorem_A(count: int = 200, seed: int = 0, max_steps: int = 9) -> SweepReport:
    rng = random.Random(seed)
    report = SweepReport(corpus={"family": "random Hopf plumbing matrices", "count": count,
                                 "seed": seed, "max_steps": max_steps})
    vacuous = 0
    for k in range(count):
        a = random_plumbing_matrix(rng.randint(1, max_steps), rng)
        ta = verify_theorem_A(a)
        vacuous += ta.vacuous
        report.records.append({"index": k, "dimension": len(a), "sigma": ta.sigma,
                               "circle_roots": ta.circle_roots, "vacuous": ta.vacuous,
                               "flags": {"thmA": ta.passed}})
        _tally(report.summary, "thmA", ta.passed)
        if not ta.passed:
            report.failures.append({"index": k, "check": "thmA", "matrix": a})
    report.summary["vacuous"] = vacuous
    return report


# --------------------------------------------------------------------------
# optimal family


def optimal_chain(copies: int) -> Tree:
    """``copies`` case-5 trees, each glued at its v'' to the v'' of the previous one."""
    base, v2 = case5_tree()
    t, last = base, v2
    for _ in range(copies - 1):
        offset = t.vertex_count
        t = glue(t, last, base, v2)
        last = offset + v2
    return t


def optimal_family_check(copies: int, random_bases: int = 50, seed: int = 0) -> SweepReport:
    if copies < 1:
        raise ValueError("copies must be at least 1")
    report = SweepReport(corpus={"family": "optimal chain", "copies": copies,
                                 "random_bases": random_bases, "seed": seed})
    for m in range(1, copies + 1):
        t = optimal_chain(m)
        sigma = symmetrized_form(t).signature
        ok = sigma == 4 * m and t.vertex_count == 6 * m
        report.records.append({"kind": "chain", "copies": m, "code": canonical_code(t),
                               "b1": t.vertex_count, "sigma": sigma, "flags": {"chain": ok}})
        _tally(report.summary, "chain", ok)
        if not ok:
            report.failures.append({"check": "chain", "copies": m, "sigma": sigma})
    rng = random.Random(seed)
    piece, v2 = case5_tree()
    other_attach_changes = 0
    for k in range(random_bases):
        base = random_tree(rng.randint(1, 12), rng)
        at = rng.randrange(base.vertex_count)
        s0 = symmetrized_form(base).signature
        s1 = symmetrized_form(glue(base, at, piece, v2)).signature
        ok = s1 == s0 + 4
        # exploratory: the same base glued through another vertex of the piece
        w = rng.choice([x for x in range(piece.vertex_count) if x != v2])
        s2 = symmetrized_form(glue(base, at, piece, w)).signature
        other_attach_changes += s2 != s0 + 4
        report.records.append({"kind": "random base", "index": k, "code": canonical_code(base),
                               "attach": at, "sigma_before": s0, "sigma_after": s1,
                               "other_vertex": w, "sigma_other": s2,
                               "flags": {"adds_four": ok}})
        _tally(report.summary, "adds_four", ok)
        if not ok:
            report.failures.append({"check": "adds_four", "code": canonical_code(base),
                                    "attach": at, "sigma_before": s0, "sigma_after": s1})
    report.summary["other_attachment_not_plus_four"] = other_attach_changes
    return report


# --------------------------------------------------------------------------
# root location of Alexander polynomials


def conjecture1_scan(max_n: int, family: str = "trees") -> SweepReport:
    """Locate the zeros of Delta: negative real or on the unit circle.

    For trees this is a consequence of the monodromy correspondence and is
    checked; for spiral divides the counts are reported without a check.
    """
    report = SweepReport(corpus={"family": family, "max_n": max_n})
    if family == "trees":
        items = ((canonical_code(t), seifert_matrix(t).tolist())
                 for level in free_tree_levels(max_n) for t in level)
    elif family == "spiral":
        items = ((f"spiral-{n}", upper_lift(spiral_form(n)).tolist()) for n in range(1, max_n + 1))
    else:
        raise ValueError(f"unknown family {family!r}")
    boundary = 0
    for code, a in items:
        delta = linalg.alexander_poly(a)
        sqf = polynomials.squarefree_decomposition(delta)
        circle = polynomials.circle_root_count(delta, sqf)
        negative = polynomials.negative_real_root_count(delta, sqf)
        # zeros at -1 are both negative and on the circle
        at_minus_one, _ = polynomials.strip_linear(delta, -1)
        located = circle + negative - at_minus_one
        at_one, _ = polynomials.strip_linear(delta, 1)
        boundary += at_one > 0
        rec = {"code": code, "degree": delta.degree, "circle": circle, "negative_real": negative,
               "at_one": at_one, "unlocated": delta.degree - located}
        if family == "trees":
            ok = located == delta.degree
            rec["flags"] = {"located": ok}
            _tally(report.summary, "located", ok)
            if not ok:
                report.failures.append({"code": code, "check": "located"})
        report.records.append(rec)
    if family == "trees":
        # located zeros have real part at most 1, reached only at t = 1
        report.summary["real_part_bound"] = "1"
    report.summary["zeros_at_one"] = boundary
    return report
