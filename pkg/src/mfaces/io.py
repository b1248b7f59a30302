"""Plain facet-list files and the bracketed ``name=[[...],...]`` format."""
from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Iterable

from .complex import SimplicialComplex


class ParseError(ValueError):
    pass


def format_complex(K: SimplicialComplex, comments: Iterable[str] = ()) -> str:
    """One facet per line, vertices ascending, facets in lexicographic order."""
    lines = [f"# {c}" if c else "#" for c in comments]
    lines += [" ".join(map(str, f)) for f in sorted(K.facets)]
    return "\n".join(lines) + "\n"


def parse_complex(text: str) -> SimplicialComplex:
    facets = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            face = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"line {lineno}: expected space-separated integers, got {raw!r}") from None
        if any(v <= 0 for v in face):
            raise ParseError(f"line {lineno}: vertex labels must be positive")
        if len(set(face)) != len(face):
            raise ParseError(f"line {lineno}: repeated vertex in facet")
        facets.append(face)
    if not facets:
        raise ParseError("no facets found")
    return SimplicialComplex(facets)


_ENTRY = re.compile(r"\s*([A-Za-z0-9_.#+\-]+)\s*=\s*(\[\s*\[.*?\]\s*\])\s*;?", re.DOTALL)


def parse_lutz(text: str) -> list[tuple[str, SimplicialComplex]]:
    """All ``name=[[v,...],[v,...],...]`` entries of a document; anything else is an error."""
    out = []
    pos = 0
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _ENTRY.match(text, pos)
        if not m:
            snippet = text[pos:pos + 40].strip()
            raise ParseError(f"malformed entry at offset {pos}: {snippet!r}")
        name, body = m.group(1), m.group(2)
        try:
            data = json.loads(body)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{name}: facet list is not a bracketed integer list ({exc.msg})") from None
        if not data or not all(isinstance(f, list) and f and all(type(v) is int and v > 0 for v in f) for f in data):
            raise ParseError(f"{name}: facets must be nonempty lists of positive integers")
        out.append((name, SimplicialComplex(data)))
        pos = m.end()
    if not out:
        raise ParseError("no entries found")
    return out


def format_lutz(name: str, K: SimplicialComplex) -> str:
    body = ",".join("[" + ",".join(map(str, f)) + "]" for f in sorted(K.facets))
    return f"{name}=[{body}]\n"


def looks_like_lutz(text: str) -> bool:
    return "=" in text and "[" in text


def read_any(path: str | Path) -> list[tuple[str, SimplicialComplex]]:
    """Read either format; plain files yield one entry named after the file."""
    p = Path(path)
    text = p.read_text()
    if looks_like_lutz(text):
        return parse_lutz(text)
    return [(p.stem, parse_complex(text))]


def load_data_dir(directory: str | Path) -> dict[str, SimplicialComplex]:
    """Every entry of every readable file in a directory, keyed by entry name."""
    found: dict[str, SimplicialComplex] = {}
    for p in sorted(Path(directory).iterdir()):
        if not p.is_file():
            continue
        for name, K in read_any(p):
            found[name] = K
    return found


def lookup(found: dict[str, SimplicialComplex], key: str) -> SimplicialComplex | None:
    """Match an entry named ``key`` or ending in ``_key``."""
    if key in found:
        return found[key]
    for name, K in found.items():
        if name.endswith("_" + key):
            return K
    return None
