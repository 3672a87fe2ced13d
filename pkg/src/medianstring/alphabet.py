"""Symbol alphabets and string collections.

Every string handled by this package is an ordinary ``str`` whose characters
all come from a declared :class:`Alphabet`.  The empty symbol (used by cost
models for insertions and deletions) is represented as the empty string ``""``
at the API surface and occupies the last row/column of cost matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

# Display token for the empty symbol in cost-matrix files.
EPS_TOKEN = "EPS"


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of distinct single-character symbols.

    The empty symbol is implicit: it is addressable as code ``len(symbols)``
    and never appears inside strings.
    """

    symbols: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.symbols) < 1:
            raise ValueError("alphabet needs at least one symbol")
        for sym in self.symbols:
            if not isinstance(sym, str) or len(sym) != 1:
                raise ValueError(f"symbols must be single characters, got {sym!r}")
            if sym.isspace() or sym == "#":
                raise ValueError(f"symbol {sym!r} clashes with the file format")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("alphabet symbols must be distinct")
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.symbols)})

    @classmethod
    def from_string(cls, symbols: str) -> "Alphabet":
        return cls(tuple(symbols))

    @property
    def size(self) -> int:
        return len(self.symbols)

    @property
    def eps_code(self) -> int:
        """Code of the empty symbol (one past the last real symbol)."""
        return len(self.symbols)

    def code(self, symbol: str) -> int:
        """Return the integer code of a symbol; "" maps to the empty symbol."""
        if symbol == "":
            return self.eps_code
        try:
            return self._index[symbol]
        except KeyError:
            raise ValueError(f"symbol {symbol!r} is not in the alphabet") from None

    def symbol(self, code: int) -> str:
        """Inverse of :meth:`code` (the empty symbol comes back as "")."""
        if code == self.eps_code:
            return ""
        return self.symbols[code]

    def __contains__(self, symbol: str) -> bool:
        return symbol in self._index

    def encode(self, s: str) -> np.ndarray:
        """Encode a string as an array of symbol codes.

        Raises ValueError if any character is outside the alphabet.
        """
        try:
            return np.array([self._index[ch] for ch in s], dtype=np.uint16)
        except KeyError as exc:
            raise ValueError(
                f"string {s!r} contains symbol {exc.args[0]!r} "
                "which is not in the alphabet"
            ) from None

    def decode(self, codes) -> str:
        return "".join(self.symbols[c] for c in codes)

    def validate_string(self, s: str) -> None:
        for ch in s:
            if ch not in self._index:
                raise ValueError(
                    f"string {s!r} contains symbol {ch!r} which is not in the alphabet"
                )


@dataclass(frozen=True)
class StringSet:
    """A non-empty collection of strings over a shared alphabet.

    Members are addressed by their index (a stable integer id).  Labels are
    optional per-member tags carried through file round trips.
    """

    members: tuple[str, ...]
    alphabet: Alphabet
    labels: tuple[str | None, ...] | None = None

    def __post_init__(self):
        if len(self.members) == 0:
            raise ValueError("a string set needs at least one member")
        for m in self.members:
            self.alphabet.validate_string(m)
        if self.labels is not None and len(self.labels) != len(self.members):
            raise ValueError("labels, when given, must match members one to one")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i: int) -> str:
        return self.members[i]

    def subset(self, ids) -> "StringSet":
        """A new set holding the members at the given indices, in that order."""
        ids = list(ids)
        labels = None
        if self.labels is not None:
            labels = tuple(self.labels[i] for i in ids)
        return StringSet(tuple(self.members[i] for i in ids), self.alphabet, labels)
