"""Algebra file format (versioned JSON with exact rational coefficients) and
the classification report document."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Union

from .algebra import HomAlgebra, HomJMPAlgebra, minus_algebra
from .forms import (
    BilinearForm,
    check_pseudo_euclidean_homjmp,
    check_triple_invariance,
)
from .identities import (
    CheckReport,
    check_admissible_jmp,
    check_condition_rl,
    check_hom_alternative,
    check_hom_flexible,
    check_hom_jmp,
    check_hom_jordan,
    check_hom_leibniz,
    check_hom_malcev,
    check_power_hom_associative,
)
from .linalg import Matrix, Tensor3, Tensor4, parse_rat
from .triples import HLJPSystem, HomTripleSystem, check_hljp, check_hlts_axioms

FORMAT_VERSION = 1

AnyObject = Union[HomAlgebra, HomJMPAlgebra, HomTripleSystem, HLJPSystem]


class AlgebraFileError(ValueError):
    """Malformed algebra file: parse error or invariant violation."""


@dataclass
class LoadedAlgebra:
    """An algebra file in memory: the object plus its optional form and metadata."""

    kind: str
    algebra: AnyObject
    form: BilinearForm | None = None
    name: str = ""
    meta: dict = field(default_factory=dict)


def kind_of(obj: AnyObject) -> str:
    if isinstance(obj, HomAlgebra):
        return "algebra"
    if isinstance(obj, HomJMPAlgebra):
        return "jmp"
    if isinstance(obj, (HomTripleSystem, HLJPSystem)):
        return "triple"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


# ---------------------------------------------------------------------------
# serialization

def _matrix_doc(m: Matrix) -> list:
    return [[str(x) for x in row] for row in m.entries]


def _sparse3_doc(t: Tensor3) -> list:
    return [[i, j, k, str(c)] for i, j, k, c in t.sparse_items()]


def _sparse4_doc(t: Tensor4) -> list:
    return [[i, j, k, l, str(c)] for i, j, k, l, c in t.sparse_items()]


def to_document(loaded: LoadedAlgebra) -> dict:
    """Canonical file document: sorted sparse entries, lowest-term rationals."""
    obj = loaded.algebra
    kind = kind_of(obj)
    if kind == "algebra":
        products = {"mul": _sparse3_doc(obj.mul)}
    elif kind == "jmp":
        products = {"bracket": _sparse3_doc(obj.bracket), "jordan": _sparse3_doc(obj.jordan)}
    else:
        products = {"triple": _sparse4_doc(obj.triple)}
        if isinstance(obj, HLJPSystem):
            products["jordan"] = _sparse3_doc(obj.jordan)
    doc = {
        "format": FORMAT_VERSION,
        "name": loaded.name,
        "kind": kind,
        "dim": obj.dim,
        "products": products,
        "twist": _matrix_doc(obj.twist),
    }
    if loaded.form is not None:
        doc["form"] = _matrix_doc(loaded.form.matrix)
    if loaded.meta:
        doc["meta"] = loaded.meta
    return doc


def _parse_coeff(text, where: str):
    if not isinstance(text, str):
        raise AlgebraFileError(f"{where}: coefficient must be a string, got {text!r}")
    try:
        return parse_rat(text)
    except ValueError as exc:
        raise AlgebraFileError(f"{where}: {exc}") from None


def _parse_matrix(rows, dim: int, where: str) -> Matrix:
    if (not isinstance(rows, list) or len(rows) != dim
            or any(not isinstance(r, list) or len(r) != dim for r in rows)):
        raise AlgebraFileError(f"{where}: expected a dense {dim}x{dim} matrix")
    return Matrix([[_parse_coeff(x, where) for x in row] for row in rows])


def _parse_sparse3(items, dim: int, where: str) -> Tensor3:
    triples = []
    for entry in items:
        if not isinstance(entry, list) or len(entry) != 4:
            raise AlgebraFileError(f"{where}: entries must be [i, j, k, coefficient]")
        i, j, k, c = entry
        if not all(isinstance(x, int) and 0 <= x < dim for x in (i, j, k)):
            raise AlgebraFileError(f"{where}: index out of range in {entry}")
        triples.append((i, j, k, _parse_coeff(c, where)))
    return Tensor3.from_sparse(dim, triples)


def _parse_sparse4(items, dim: int, where: str) -> Tensor4:
    quads = []
    for entry in items:
        if not isinstance(entry, list) or len(entry) != 5:
            raise AlgebraFileError(f"{where}: entries must be [i, j, k, l, coefficient]")
        i, j, k, l, c = entry
        if not all(isinstance(x, int) and 0 <= x < dim for x in (i, j, k, l)):
            raise AlgebraFileError(f"{where}: index out of range in {entry}")
        quads.append((i, j, k, l, _parse_coeff(c, where)))
    return Tensor4.from_sparse(dim, quads)


def from_document(doc: dict) -> LoadedAlgebra:
    if not isinstance(doc, dict):
        raise AlgebraFileError("algebra file must be a JSON object")
    if doc.get("format") != FORMAT_VERSION:
        raise AlgebraFileError(f"unsupported format {doc.get('format')!r}")
    kind = doc.get("kind")
    dim = doc.get("dim")
    if kind not in ("algebra", "jmp", "triple"):
        raise AlgebraFileError(f"kind must be algebra|jmp|triple, got {kind!r}")
    if not isinstance(dim, int) or dim < 0:
        raise AlgebraFileError(f"dim must be a non-negative integer, got {dim!r}")
    products = doc.get("products")
    if not isinstance(products, dict):
        raise AlgebraFileError("products: expected an object of named entry lists")
    twist = _parse_matrix(doc.get("twist"), dim, "twist")
    try:
        if kind == "algebra":
            if set(products) != {"mul"}:
                raise AlgebraFileError('kind "algebra" needs exactly the "mul" product list')
            obj: AnyObject = HomAlgebra(_parse_sparse3(products["mul"], dim, "mul"), twist)
        elif kind == "jmp":
            if not {"bracket", "jordan"} <= set(products):
                raise AlgebraFileError('kind "jmp" requires both "bracket" and "jordan"')
            if set(products) != {"bracket", "jordan"}:
                raise AlgebraFileError('kind "jmp" allows only "bracket" and "jordan"')
            obj = HomJMPAlgebra(_parse_sparse3(products["bracket"], dim, "bracket"),
                                _parse_sparse3(products["jordan"], dim, "jordan"), twist)
        else:
            if "triple" not in products or not set(products) <= {"triple", "jordan"}:
                raise AlgebraFileError('kind "triple" needs "triple" (optionally "jordan")')
            system = HomTripleSystem(_parse_sparse4(products["triple"], dim, "triple"), twist)
            if "jordan" in products:
                obj = HLJPSystem(system, _parse_sparse3(products["jordan"], dim, "jordan"))
            else:
                obj = system
    except AlgebraFileError:
        raise
    except ValueError as exc:
        raise AlgebraFileError(str(exc)) from None
    form = None
    if "form" in doc:
        form = BilinearForm(_parse_matrix(doc["form"], dim, "form"))
    meta = doc.get("meta", {})
    if not isinstance(meta, dict):
        raise AlgebraFileError("meta must be an object")
    return LoadedAlgebra(kind=kind, algebra=obj, form=form,
                         name=doc.get("name", ""), meta=meta)


def dumps(loaded: LoadedAlgebra) -> str:
    return json.dumps(to_document(loaded), indent=2, sort_keys=True) + "\n"


def loads(text: str) -> LoadedAlgebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFileError(f"not valid JSON: {exc}") from None
    return from_document(doc)


def save(loaded: LoadedAlgebra, path) -> None:
    with open(path, "w", encoding="utf-8") as fp:
        fp.write(dumps(loaded))


def load(path) -> LoadedAlgebra:
    with open(path, "r", encoding="utf-8") as fp:
        return loads(fp.read())


# ---------------------------------------------------------------------------
# classification report

def run_suite(loaded: LoadedAlgebra, suite: str, seed: int = 0,
              max_power: int = 6) -> list[CheckReport]:
    """Run one named suite against a loaded file; returns its check reports."""
    runners = _suite_table(loaded, seed, max_power)
    try:
        runner = runners[suite]
    except KeyError:
        valid = ", ".join(sorted(runners))
        raise ValueError(f"suite {suite!r} is not available for kind {loaded.kind!r} "
                         f"(valid: {valid})") from None
    return runner()


def available_suites(loaded: LoadedAlgebra) -> list[str]:
    return sorted(_suite_table(loaded, 0, 6))


def _suite_table(loaded: LoadedAlgebra, seed: int, max_power: int) -> dict:
    obj = loaded.algebra
    kind = loaded.kind
    table: dict = {}
    if kind == "algebra":
        table["flexible"] = lambda: [check_hom_flexible(obj)]
        table["alternative"] = lambda: [check_hom_alternative(obj)]
        table["jordan"] = lambda: [check_hom_jordan(obj)]
        table["malcev"] = lambda: [_named(check_hom_malcev(minus_algebra(obj)), "malcev-minus")]
        table["leibniz"] = lambda: [check_hom_leibniz(_pair(obj))]
        table["admissible"] = lambda: [check_admissible_jmp(obj)]
        table["jmp"] = table["admissible"]
        table["rl-condition"] = lambda: [check_condition_rl(obj)]
        table["power"] = lambda: [
            check_power_hom_associative(obj, strict_34=True),
            check_power_hom_associative(obj, strict_34=False, max_power=max_power, seed=seed)]
    elif kind == "jmp":
        table["malcev"] = lambda: [_named(
            check_hom_malcev(HomAlgebra(obj.bracket, obj.twist)), "bracket-hom-malcev")]
        table["jordan"] = lambda: [_named(
            check_hom_jordan(HomAlgebra(obj.jordan, obj.twist)), "jordan-hom-jordan")]
        table["leibniz"] = lambda: [check_hom_leibniz(obj)]
        table["jmp"] = lambda: [check_hom_jmp(obj)]
    else:
        system = obj.triple_system if isinstance(obj, HLJPSystem) else obj
        table["hlts"] = lambda: [check_hlts_axioms(system)]
        if isinstance(obj, HLJPSystem):
            table["hljp"] = lambda: [check_hljp(obj)]
    if loaded.form is not None:
        if kind == "jmp":
            table["pseudo-euclidean"] = lambda: [check_pseudo_euclidean_homjmp(obj, loaded.form)]
        elif kind == "triple":
            system = obj.triple_system if isinstance(obj, HLJPSystem) else obj
            table["pseudo-euclidean"] = lambda: [
                check_triple_invariance(system, loaded.form)]
    # "jmp" on a single-product algebra is an alias for "admissible": run it once in "all"
    primary = sorted(key for key in table if not (kind == "algebra" and key == "jmp"))
    table["all"] = lambda: [rep for key in primary for rep in table[key]()]
    return table


def _named(report: CheckReport, name: str) -> CheckReport:
    report.name = name
    return report


def _pair(a: HomAlgebra) -> HomJMPAlgebra:
    from .algebra import jmp_pair

    return jmp_pair(a)


def build_report(loaded: LoadedAlgebra, seed: int = 0, max_power: int = 6) -> dict:
    """Full classification document for a loaded file. Deterministic given the seed."""
    reports = run_suite(loaded, "all", seed=seed, max_power=max_power)
    classification = {}
    for rep in reports:
        classification[rep.name] = rep.verdict
    return {
        "name": loaded.name,
        "kind": loaded.kind,
        "dim": loaded.algebra.dim,
        "seed": seed,
        "classification": classification,
        "checks": [rep.to_doc() for rep in reports],
    }


def report_to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
