"""
Vertex roles of reduced instances and their textual tags.

A tag is the role kind followed by its indices, joined by dots, with a trailing
`pad` when the vertex only exists because of padding: `X.4`, `B.0.2.7`,
`C.3.pad`.
"""

from dataclasses import dataclass

from roman3.errors import FormatError

PAD = "pad"


@dataclass(frozen=True)
class Role:
    kind: str
    index: tuple[int, ...]
    padding: bool = False

    @property
    def tag(self) -> str:
        parts = [self.kind, *(str(i) for i in self.index)]
        if self.padding:
            parts.append(PAD)
        return ".".join(parts)


def parse_tag(tag: str, line: int = 0) -> Role:
    parts = tag.split(".")
    padding = parts[-1] == PAD
    if padding:
        parts = parts[:-1]
    kind, *indices = parts
    if not kind or not kind.isalpha():
        raise FormatError(line, f"role tag '{tag}' has no kind")
    try:
        index = tuple(int(i) for i in indices)
    except ValueError:
        raise FormatError(line, f"role tag '{tag}' has a non-integer index") from None
    return Role(kind, index, padding)


def role_counts(roles: tuple[Role, ...]) -> dict[str, int]:
    counts: dict[str, int] = {}
    for role in roles:
        counts[role.kind] = counts.get(role.kind, 0) + 1
    return counts
