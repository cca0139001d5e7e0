"""Reading and writing stabilizer codes.

Two formats, both bit-exact:

* JSON: an object with ``n``, ``K``, ``claimed_distance``,
  ``verified_distance``, ``pure`` and ``stabilizers`` (Pauli strings).
* text: a header line ``n=<n> K=<K>`` followed by one Pauli string per line.

The generator is not stored; it is recomputed as the normalizer of the
stabilizer when a file is read.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .errors import FormatError
from .stabilizer import StabilizerCode, check_commutativity, from_stabilizer, stabilizer_from_pauli_strings, to_pauli_strings

FORMAT_TAG = "enlarged-css/stabilizer-code"
_HEADER = re.compile(r"^n=(\d+) K=(-?\d+)$")


def to_json(code: StabilizerCode) -> str:
    doc = {
        "format": FORMAT_TAG,
        "version": 1,
        "n": code.n,
        "K": code.K,
        "claimed_distance": code.claimed_distance,
        "verified_distance": code.distance,
        "pure": code.pure,
        "stabilizers": to_pauli_strings(code),
    }
    return json.dumps(doc, indent=2) + "\n"


def to_text(code: StabilizerCode) -> str:
    return "\n".join([f"n={code.n} K={code.K}", *to_pauli_strings(code)]) + "\n"


def _build(n: int, K: int, lines: list[str], **kwargs) -> StabilizerCode:
    if len(lines) != n - K:
        raise FormatError(f"expected n - K = {n - K} stabilizer rows, found {len(lines)}")
    hx, hz = stabilizer_from_pauli_strings(lines, n)
    code = from_stabilizer(hx, hz, **kwargs)
    if not check_commutativity(code):
        raise FormatError("stabilizer rows do not commute")
    if code.K != K:
        raise FormatError(f"stabilizer rows are dependent: header says K={K}, rows give K={code.K}")
    return code


def from_json(text: str) -> StabilizerCode:
    try:
        doc = json.loads(text)
        if doc.get("format") != FORMAT_TAG:
            raise FormatError(f"not a {FORMAT_TAG} document")
        return _build(
            int(doc["n"]), int(doc["K"]), list(doc["stabilizers"]),
            claimed_distance=doc.get("claimed_distance"),
            distance=doc.get("verified_distance"),
            pure=doc.get("pure"),
        )
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise FormatError(f"malformed code document: {exc}") from exc


def from_text(text: str) -> StabilizerCode:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not (m := _HEADER.match(lines[0])):
        raise FormatError("missing 'n=<n> K=<K>' header line")
    return _build(int(m.group(1)), int(m.group(2)), lines[1:])


def dumps(code: StabilizerCode, fmt: str = "json") -> str:
    if fmt == "json":
        return to_json(code)
    if fmt == "text":
        return to_text(code)
    raise ValueError(f"unknown format {fmt!r}")


def loads(text: str) -> StabilizerCode:
    """Parse either format, sniffing JSON by its leading brace."""
    return from_json(text) if text.lstrip().startswith("{") else from_text(text)


def load(path: str | Path) -> StabilizerCode:
    return loads(Path(path).read_text())
