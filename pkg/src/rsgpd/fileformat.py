"""Line-oriented text format for structures and element mappings.

    # comment
    elements: e f
    compose: e f -> e
    star: e -> e          (all elements or none)
    E: e f                (optional, defaults to the star image)

Mapping files instead carry ``source: path``, ``target: path`` and
``map: a -> x`` lines; paths are relative to the mapping file.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .core import ElementMapping, RestrictionSemigroupoid, Semigroupoid

NAME = re.compile(r"[A-Za-z0-9_{},|⊥]+\Z")
KEYWORDS = ("elements", "compose", "star", "E", "map", "source", "target")


class ParseError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class UnknownElement(ParseError):
    pass


class DuplicateComposeKey(ParseError):
    pass


@dataclass
class DocumentModel:
    elements: list = field(default_factory=list)
    compose: list = field(default_factory=list)
    star: list = field(default_factory=list)
    E: tuple | None = None
    maps: list = field(default_factory=list)
    source: str | None = None
    target: str | None = None
    base_dir: Path | None = None

    @property
    def is_mapping(self) -> bool:
        return bool(self.maps or self.source or self.target)


def _names(tokens, lineno):
    for t in tokens:
        if not NAME.match(t):
            raise ParseError(f"bad element name {t!r}", lineno)
    return tokens


def _arrow(tokens, arity, lineno, what):
    if len(tokens) != arity + 2 or tokens[-2] != "->":
        shape = " ".join(["x"] * arity) + " -> y"
        raise ParseError(f"{what} line must read '{what}: {shape}'", lineno)
    return _names(tokens[:arity] + tokens[-1:], lineno)


def parse(text: str, base_dir=None) -> DocumentModel:
    doc = DocumentModel(base_dir=Path(base_dir) if base_dir is not None else None)
    seen_pairs = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        key = head.strip()
        if not sep or key not in KEYWORDS or " " in key:
            raise ParseError(f"unknown section {head.strip()!r}", lineno)
        tokens = rest.split()
        if key == "elements":
            doc.elements.extend((x, lineno) for x in _names(tokens, lineno))
        elif key == "compose":
            a, b, c = _arrow(tokens, 2, lineno, "compose")
            if (a, b) in seen_pairs:
                raise DuplicateComposeKey(f"pair ({a},{b}) already composed on line {seen_pairs[(a, b)]}", lineno)
            seen_pairs[(a, b)] = lineno
            doc.compose.append((a, b, c, lineno))
        elif key == "star":
            a, e = _arrow(tokens, 1, lineno, "star")
            doc.star.append((a, e, lineno))
        elif key == "E":
            if doc.E is not None:
                raise ParseError("E given twice", lineno)
            doc.E = (tuple(_names(tokens, lineno)), lineno)
        elif key == "map":
            a, x = _arrow(tokens, 1, lineno, "map")
            doc.maps.append((a, x, lineno))
        else:
            if len(tokens) != 1:
                raise ParseError(f"{key} takes exactly one path", lineno)
            setattr(doc, key, tokens[0])
    return doc


def _resolve(doc: DocumentModel):
    index = {}
    for x, lineno in doc.elements:
        if x in index:
            raise ParseError(f"element {x!r} declared twice", lineno)
        index[x] = len(index)

    def look(x, lineno):
        if x not in index:
            raise UnknownElement(f"unknown element {x!r}", lineno)
        return index[x]

    return index, look


def build(doc: DocumentModel):
    """Semigroupoid, RestrictionSemigroupoid or ElementMapping, depending on the sections present."""
    if doc.is_mapping:
        return _build_mapping(doc)
    if not doc.elements:
        raise ParseError("no elements declared")
    index, look = _resolve(doc)
    names = tuple(x for x, _ in doc.elements)
    table = {(look(a, n), look(b, n)): look(c, n) for a, b, c, n in doc.compose}
    S = Semigroupoid(names, table)
    if not doc.star:
        if doc.E is not None:
            raise ParseError("E given without star", doc.E[1])
        return S
    star = {}
    for a, e, n in doc.star:
        i = look(a, n)
        if i in star:
            raise ParseError(f"star of {a!r} given twice", n)
        star[i] = look(e, n)
    missing = [names[i] for i in range(len(names)) if i not in star]
    if missing:
        raise ParseError(f"star must be given for all elements or none; missing {' '.join(missing)}")
    E = None
    if doc.E is not None:
        E = frozenset(look(x, doc.E[1]) for x in doc.E[0])
    return RestrictionSemigroupoid(S, tuple(star[i] for i in range(len(names))), E)


def load(path):
    path = Path(path)
    return build(parse(path.read_text(encoding="utf-8"), base_dir=path.parent))


def _build_mapping(doc: DocumentModel) -> ElementMapping:
    if doc.elements or doc.compose or doc.star or doc.E is not None:
        raise ParseError("a mapping file cannot also declare a structure")
    if not (doc.source and doc.target):
        raise ParseError("mapping file needs both source: and target:")
    base = doc.base_dir or Path(".")
    S = load(base / doc.source)
    T = load(base / doc.target)
    m = {}
    for a, x, n in doc.maps:
        if a not in S.names:
            raise UnknownElement(f"unknown source element {a!r}", n)
        if x not in T.names:
            raise UnknownElement(f"unknown target element {x!r}", n)
        if a in m:
            raise ParseError(f"{a!r} mapped twice", n)
        m[a] = x
    missing = [a for a in S.names if a not in m]
    if missing:
        raise ParseError(f"map is not total; missing {' '.join(missing)}")
    return ElementMapping.from_names(S, T, m)


def emit(S) -> str:
    """Canonical text: declaration order, compose lines sorted by pair, ``E`` only when it
    differs from the star image."""
    R = S if isinstance(S, RestrictionSemigroupoid) else None
    B = S.base if R is not None else S
    nm = B.names
    lines = ["elements: " + " ".join(nm)]
    for (s, t), u in sorted(B.table.items()):
        lines.append(f"compose: {nm[s]} {nm[t]} -> {nm[u]}")
    if R is not None:
        lines += [f"star: {nm[s]} -> {nm[e]}" for s, e in enumerate(R.star)]
        if R.distinct_set != frozenset(R.star):
            lines.append("E: " + " ".join(nm[e] for e in sorted(R.distinct_set)))
    return "\n".join(lines) + "\n"


def emit_mapping(f: ElementMapping, source_path, target_path) -> str:
    lines = [f"source: {source_path}", f"target: {target_path}"]
    lines += [f"map: {a} -> {x}" for a, x in f.as_names().items()]
    return "\n".join(lines) + "\n"
