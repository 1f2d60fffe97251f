"""Regression corpus of named singularities with expected invariants."""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from whmilnor.equivalence import Substitution, right_equivalent_wh, verify_substitution
from whmilnor.errors import HypothesisViolation, WhMilnorError
from whmilnor.gaffney_hauser import gaffney_hauser_scenario
from whmilnor.grading import is_weighted_homogeneous
from whmilnor.ideals import milnor_algebra, saito_check
from whmilnor.parser import parse_polynomial, parse_polynomial_list
from whmilnor.pencil import Pencil, exceptional_values, transformation_matrix
from whmilnor.poly import WeightSystem
from whmilnor.vector_fields import lie_algebra_a_basis

KNOWN_INVARIANTS = ("milnor_number", "hilbert", "lie_algebra_dim", "saito", "equivalence",
                    "exceptional_roots", "substitution_verified", "gaffney_hauser_samples")


class CatalogError(WhMilnorError):
    exit_code = 1


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    variables: tuple
    weights: tuple | None
    degree: int | None
    polynomial: str
    partner: str | None = None
    substitution: str | None = None
    expected: dict = field(default_factory=dict)

    @property
    def weight_system(self):
        if self.weights is None:
            return None
        return WeightSystem(self.variables, self.weights)

    def parsed(self):
        return parse_polynomial(self.polynomial, self.variables)

    def parsed_partner(self):
        return parse_polynomial(self.partner, self.variables) if self.partner else None


def _validate(raw, position):
    problems = []
    if not isinstance(raw, dict):
        return None, [f"entry {position}: not a JSON object"]
    name = raw.get("name") or f"#{position}"
    for key in ("name", "variables", "polynomial"):
        if key not in raw:
            problems.append(f"{name}: missing field {key!r}")
    if problems:
        return None, problems
    unknown = set(raw.get("expected", {})) - set(KNOWN_INVARIANTS)
    if unknown:
        problems.append(f"{name}: unknown expected invariants {sorted(unknown)}")
    weights = raw.get("weights")
    entry = CatalogEntry(
        name=name, variables=tuple(raw["variables"]),
        weights=tuple(weights) if weights is not None else None,
        degree=raw.get("degree"), polynomial=raw["polynomial"], partner=raw.get("partner"),
        substitution=raw.get("substitution"), expected=dict(raw.get("expected", {})))
    try:
        f = entry.parsed()
        g = entry.parsed_partner()
        W = entry.weight_system
        if W is not None:
            for label, p in (("polynomial", f), ("partner", g)):
                if p is None:
                    continue
                d = is_weighted_homogeneous(p, W)
                if d != entry.degree:
                    got = "not homogeneous" if d is None else f"degree {d}"
                    problems.append(f"{name}: {label} is not weighted homogeneous of degree "
                                    f"{entry.degree} for weights {list(W.weights)} ({got})")
        elif entry.degree is not None:
            problems.append(f"{name}: a degree is given without weights")
    except (WhMilnorError, ValueError) as exc:
        problems.append(f"{name}: {exc}")
    return entry, problems


def load_catalog(path=None):
    """Read and validate every entry; any invalid entry rejects the whole file."""
    if path is None:
        text = resources.files("whmilnor").joinpath("data/catalog.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"catalog is not valid JSON: {exc}") from None
    if not isinstance(raw, list):
        raise CatalogError("catalog must be a JSON array of entries")
    entries, problems = [], []
    for k, item in enumerate(raw):
        entry, errs = _validate(item, k)
        problems += errs
        if entry is not None:
            entries.append(entry)
    names = [e.name for e in entries]
    dupes = sorted({n for n in names if names.count(n) > 1})
    if dupes:
        problems.append(f"duplicate entry names: {dupes}")
    if problems:
        raise CatalogError("catalog rejected:\n  " + "\n  ".join(problems))
    return sorted(entries, key=lambda e: e.name)


def compute_invariants(entry):
    """Recompute every invariant named in ``entry.expected``."""
    f = entry.parsed()
    g = entry.parsed_partner()
    W = entry.weight_system or WeightSystem.standard(entry.variables)
    want = entry.expected
    got = {}
    if "milnor_number" in want or "hilbert" in want:
        rep = milnor_algebra(f, weights=W)
        got["milnor_number"] = rep.milnor_number
        if "hilbert" in want:
            got["hilbert"] = {str(k): v for k, v in (rep.hilbert or {}).items()}
    if "lie_algebra_dim" in want:
        got["lie_algebra_dim"] = len(lie_algebra_a_basis(W))
    if "saito" in want:
        got["saito"] = saito_check(f, entry.weight_system)
    if "equivalence" in want:
        got["equivalence"] = right_equivalent_wh(f, g, W).status
    if "exceptional_roots" in want:
        E = exceptional_values(transformation_matrix(Pencil.build(f, g, W)))
        got["exceptional_roots"] = [str(r) for r in E.rational_roots]
    if "substitution_verified" in want:
        u = Substitution(parse_polynomial_list(entry.substitution, entry.variables))
        got["substitution_verified"] = verify_substitution(u, f, g, W).ok
    if "gaffney_hauser_samples" in want:
        samples = [Fraction(s) for s in want["gaffney_hauser_samples"]]
        try:
            rep = gaffney_hauser_scenario(f, samples)
            ok = rep["bases_identical"] and rep["all_equal_displayed"]
        except HypothesisViolation:
            ok = False
        got["gaffney_hauser_samples"] = want["gaffney_hauser_samples"] if ok else []
    return got


def check_catalog(entries):
    """``[(name, passed, {invariant: (expected, got)})]`` in entry-name order."""
    results = []
    for entry in sorted(entries, key=lambda e: e.name):
        got = compute_invariants(entry)
        detail = {k: (v, got.get(k)) for k, v in entry.expected.items()}
        passed = all(a == b for a, b in detail.values())
        results.append((entry.name, passed, detail))
    return results
