"""Certificate documents: canonical JSON, integers only, self-digest.

The digest is the SHA-256 of the canonical encoding of every other field.
Verification never trusts the stored report: it rebuilds the structure
from the image arrays, re-runs the verifier, and then checks that the
stored report and digest agree with what it found.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from .perm import Permutation
from .structure import BeauvilleStructure, ProductTriple, verify_structure
from .triple import GeneratingTriple

FORMAT_VERSION = 1


class MalformedCertificate(ValueError):
    """Unparseable document or wrong shape."""


def canonical_bytes(obj) -> bytes:
    return (json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n").encode("utf-8")


def _digest(body: dict) -> str:
    return hashlib.sha256(canonical_bytes(body)).hexdigest()


def _side(P: ProductTriple) -> dict:
    return {name: [list(T[i].images) for T in P.coords] for i, name in enumerate("abc")}


def to_document(S: BeauvilleStructure) -> dict:
    body = {
        "format_version": FORMAT_VERSION,
        "group": {"family": "alternating", "n": S.n, "k": S.k},
        "triples": [_side(P) for P in S.triples],
        "claimed_types": [list(t) for t in S.type],
        "report": S.report.as_dict(),
        "provenance": {
            "recipe": S.recipe,
            "parameters": S.parameters,
            "seed": S.seed,
            "coordinates": [[T.provenance for T in P.coords] for P in S.triples],
        },
    }
    _check_integers_only(body)
    return dict(body, digest=_digest(body))


def dumps(S: BeauvilleStructure) -> bytes:
    return canonical_bytes(to_document(S))


def _check_integers_only(obj, path="$"):
    if isinstance(obj, float):
        raise TypeError(f"float at {path}")
    if isinstance(obj, dict):
        for key, v in obj.items():
            _check_integers_only(v, f"{path}.{key}")
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            _check_integers_only(v, f"{path}[{i}]")


def _require(cond: bool, msg: str):
    if not cond:
        raise MalformedCertificate(msg)


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def loads(data: bytes | str) -> dict:
    """Parse and shape-check; raises MalformedCertificate."""
    try:
        doc = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise MalformedCertificate(f"not JSON: {exc}") from None
    _require(isinstance(doc, dict), "top level must be an object")
    for key in ("format_version", "group", "triples", "claimed_types", "report", "provenance", "digest"):
        _require(key in doc, f"missing field {key!r}")
    _require(doc["format_version"] == FORMAT_VERSION, f"unknown format version {doc['format_version']!r}")
    g = doc["group"]
    _require(isinstance(g, dict) and g.get("family") == "alternating", "group.family must be 'alternating'")
    n, k = g.get("n"), g.get("k")
    _require(_is_int(n) and _is_int(k) and n >= 1 and k >= 1, "group.n and group.k must be positive integers")
    sides = doc["triples"]
    _require(isinstance(sides, list) and len(sides) == 2, "triples must hold two entries")
    for side in sides:
        _require(isinstance(side, dict) and set(side) == {"a", "b", "c"}, "each triple needs exactly a, b, c")
        for name in "abc":
            rows = side[name]
            _require(isinstance(rows, list) and len(rows) == k, f"{name} must list k={k} permutations")
            for row in rows:
                _require(isinstance(row, list) and len(row) == n and all(_is_int(v) for v in row),
                         f"{name} entries must be length-{n} integer arrays")
    ct = doc["claimed_types"]
    _require(isinstance(ct, list) and len(ct) == 2 and all(
        isinstance(t, list) and len(t) == 3 and all(_is_int(v) for v in t) for t in ct),
        "claimed_types must be two integer triples")
    _require(isinstance(doc["digest"], str), "digest must be a string")
    return doc


@dataclass
class CheckResult:
    ok: bool
    failed: list  # names of failing conditions, in check order
    report: dict  # freshly computed


def check_document(doc: dict) -> CheckResult:
    n = doc["group"]["n"]
    failed = []
    fresh: dict = {"conditions": {}}
    perms_ok = all(sorted(row) == list(range(1, n + 1))
                   for side in doc["triples"] for name in "abc" for row in side[name])
    fresh["conditions"]["permutations"] = int(perms_ok)
    if not perms_ok:
        failed.append("permutations")
    else:
        products = []
        for side in doc["triples"]:
            coords = tuple(GeneratingTriple(Permutation(a), Permutation(b), Permutation(c))
                           for a, b, c in zip(side["a"], side["b"], side["c"]))
            products.append(ProductTriple(coords))
        report = verify_structure(*products)
        fresh = report.as_dict()
        failed += [name for name, v in report.conditions.items() if not v]
        types = [list(P.type) for P in products]
        if types != doc["claimed_types"]:
            failed.append("claimed-types")
        if report.as_dict() != doc["report"]:
            failed.append("stored-report")
    body = {key: v for key, v in doc.items() if key != "digest"}
    if _digest(body) != doc["digest"]:
        failed.append("digest")
    return CheckResult(not failed, failed, fresh)


def verify_bytes(data: bytes | str) -> CheckResult:
    return check_document(loads(data))
