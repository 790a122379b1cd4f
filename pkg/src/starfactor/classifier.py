"""Recognise members of U using the known characterisations where they apply.

Connected graphs with minimum degree >= 2 are decided by isomorphism against a
catalog: C5 and C7 for girth >= 5, and the census-derived list for girth 3.
Everything else (leaves, girth 4, disconnected, no factor) is decided by
enumeration and flagged as lying outside the characterisation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional

from .canon import CanonicalForm, are_isomorphic, canonical_form
from .factors import StarFactor, has_star_factor
from .graph import Graph, GraphFormatError, components, cycle_graph, girth, is_connected, min_degree, parse_graph6
from .uniformity import is_uniform

CATALOG_RESOURCE = "girth3_catalog.g6"
EXPECTED_GIRTH3_MEMBERS = 5


class Status(str, enum.Enum):
    IN_U = "in_U"
    NOT_IN_U = "not_in_U"
    NO_FACTOR = "no_factor"


class Method(str, enum.Enum):
    THEOREM1 = "theorem1"
    THEOREM2_CATALOG = "theorem2_catalog"
    BRUTE_FORCE = "brute_force"


class Scope(str, enum.Enum):
    INSIDE = "inside_characterization"
    OUTSIDE = "outside_characterization"


class CatalogError(ValueError):
    pass


@dataclass
class Catalog:
    girth3_members: list[tuple[CanonicalForm, Graph]]
    girth5plus_members: list[tuple[CanonicalForm, Graph]] = field(default_factory=list)
    header: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.girth5plus_members:
            self.girth5plus_members = [(canonical_form(c), c) for c in (cycle_graph(5), cycle_graph(7))]
        self._g3 = {form for form, _ in self.girth3_members}
        self._g5 = {form for form, _ in self.girth5plus_members}

    @classmethod
    def from_graphs(cls, graphs, header=()) -> Catalog:
        return cls([(canonical_form(g), g) for g in graphs], header=list(header))

    @classmethod
    def from_text(cls, text: str) -> Catalog:
        header, graphs = [], []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                header.append(line.lstrip("# "))
                continue
            try:
                graphs.append(parse_graph6(line))
            except GraphFormatError as exc:
                raise CatalogError(f"catalog line {lineno}: {exc}") from None
        return cls.from_graphs(graphs, header)

    @classmethod
    def load(cls, path: str | Path | None = None, verify: bool = True) -> Catalog:
        if path is None:
            text = resources.files("starfactor.data").joinpath(CATALOG_RESOURCE).read_text()
        else:
            text = Path(path).read_text()
        catalog = cls.from_text(text)
        if verify:
            verify_catalog(catalog)
        return catalog

    def contains_girth3(self, g: Graph) -> bool:
        return canonical_form(g) in self._g3

    def contains_girth5plus(self, g: Graph) -> bool:
        return canonical_form(g) in self._g5


@dataclass
class CatalogVerification:
    members: int
    checked: list[str]
    discrepancy: Optional[str] = None

    def to_json(self) -> dict:
        return {"ok": True, "members": self.members, "checked": self.checked, "discrepancy": self.discrepancy}


def verify_catalog(catalog: Catalog) -> CatalogVerification:
    """Re-derive every member's properties; raise :class:`CatalogError` on any violation.

    A girth-3 member count other than five is not an error here (partial
    censuses are legitimate) but is reported in ``discrepancy``.
    """
    checked = []
    for label, members, girth_ok in (
        ("girth3", catalog.girth3_members, lambda x: x == 3),
        ("girth5plus", catalog.girth5plus_members, lambda x: x >= 5),
    ):
        for form, g in members:
            name = form.decode()
            if not is_connected(g) or g.n == 0:
                raise CatalogError(f"{label} member {name} is not connected")
            if min_degree(g) < 2:
                raise CatalogError(f"{label} member {name} has a vertex of degree < 2")
            if not girth_ok(girth(g)):
                raise CatalogError(f"{label} member {name} has girth {girth(g)}")
            report = is_uniform(g, full=True)
            if not report.uniform:
                raise CatalogError(f"{label} member {name} is not uniform: spectrum {report.spectrum}")
            checked.append(name)
        for i, (_, g) in enumerate(members):
            for _, h in members[i + 1:]:
                if are_isomorphic(g, h):
                    raise CatalogError(f"{label} catalog lists isomorphic graphs twice")
    discrepancy = None
    if len(catalog.girth3_members) != EXPECTED_GIRTH3_MEMBERS:
        discrepancy = (
            f"catalog has {len(catalog.girth3_members)} girth-3 members, "
            f"expected {EXPECTED_GIRTH3_MEMBERS}"
        )
    return CatalogVerification(len(catalog.girth3_members) + len(catalog.girth5plus_members), checked, discrepancy)


@dataclass
class Classification:
    status: Status
    method: Method
    scope_note: Scope
    witness: Optional[tuple[StarFactor, StarFactor]] = None

    def to_json(self) -> dict:
        out = {"status": self.status.value, "method": self.method.value, "scope_note": self.scope_note.value}
        if self.witness is not None:
            out["witness"] = [f.to_json() for f in self.witness]
        return out


_default_catalog: Optional[Catalog] = None


def default_catalog() -> Catalog:
    global _default_catalog
    if _default_catalog is None:
        _default_catalog = Catalog.load()
    return _default_catalog


def classify(g: Graph, catalog: Optional[Catalog] = None) -> Classification:
    catalog = catalog or default_catalog()
    if not has_star_factor(g):
        return Classification(Status.NO_FACTOR, Method.BRUTE_FORCE, Scope.OUTSIDE)
    comps = components(g)
    if len(comps) > 1:
        # a star-factor of g is a union of star-factors of its components
        parts = [classify(g.induced(c), catalog) for c in comps]
        scope = Scope.INSIDE if all(p.scope_note is Scope.INSIDE for p in parts) else Scope.OUTSIDE
        if all(p.status is Status.IN_U for p in parts):
            return Classification(Status.IN_U, Method.BRUTE_FORCE, scope)
        return Classification(Status.NOT_IN_U, Method.BRUTE_FORCE, scope, is_uniform(g).witness)
    if g.n == 0:
        return Classification(Status.IN_U, Method.BRUTE_FORCE, Scope.OUTSIDE)

    if min_degree(g) >= 2:
        gi = girth(g)
        if gi == 3:
            member, method = catalog.contains_girth3(g), Method.THEOREM2_CATALOG
        elif gi >= 5:
            member, method = catalog.contains_girth5plus(g), Method.THEOREM1
        else:
            member = None
        if member is not None:
            if member:
                return Classification(Status.IN_U, method, Scope.INSIDE)
            return Classification(Status.NOT_IN_U, method, Scope.INSIDE, is_uniform(g).witness)

    report = is_uniform(g)
    status = Status.IN_U if report.uniform else Status.NOT_IN_U
    return Classification(status, Method.BRUTE_FORCE, Scope.OUTSIDE, report.witness)
