"""Construct a structure on A12^100, serialise it, tamper with it, re-verify."""

import json

from beauville import build_beauville
from beauville import certificate

S = build_beauville(12, 100, seed=7)
data = certificate.dumps(S)
print(f"recipe {S.recipe}, types {S.type}, {len(data)} bytes")
print("verifies:", certificate.verify_bytes(data).ok)

doc = json.loads(data)
a = doc["triples"][0]["a"]
a[0], a[1] = a[1], a[0]
result = certificate.verify_bytes(certificate.canonical_bytes(doc))
print("after swapping two coordinates:", result.ok, result.failed)
