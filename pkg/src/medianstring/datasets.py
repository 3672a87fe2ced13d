"""Synthetic string generators and the on-disk formats.

Three generator families cover the benchmark needs:

- ``protein_like``: independent uniform symbols, lengths jittered around a
  mean (sequence-database flavour),
- ``chaincode_like``: first-order Markov walks over ring-ordered directions
  that favour staying put or turning one step (contour flavour),
- ``perturbed_cluster``: noisy copies of one planted center string, the
  controlled setting where the true median is roughly known.

Generation is deterministic per spec: the same :class:`DatasetSpec` always
produces the same set, and :func:`planted_center` re-derives the cluster
center without regenerating the members.

File formats (both round-trip byte-identically through the save/load pair):

- string sets: a ``#alphabet: <symbols>`` header line, then one member per
  line, optionally prefixed ``label<TAB>``;
- cost matrices: tab-separated, first row lists the symbols plus ``EPS``,
  then one row per symbol (and last the empty symbol) with ``-`` marking
  zero diagonal entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .alphabet import EPS_TOKEN, Alphabet, StringSet
from .costs import CostModel

KINDS = ("protein_like", "chaincode_like", "perturbed_cluster")

# Default symbol pool for generated alphabets: digits first (chain codes read
# naturally), then letters for the larger alphabets.
_SYMBOL_POOL = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"


@dataclass(frozen=True)
class DatasetSpec:
    """Everything a generator needs, and nothing the host decides at run time."""

    kind: str
    alphabet_size: int
    count: int
    mean_length: int
    length_jitter: int = 0
    noise_rate: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown dataset kind {self.kind!r}")
        if not 2 <= self.alphabet_size <= len(_SYMBOL_POOL):
            raise ValueError(
                f"alphabet_size must be in [2, {len(_SYMBOL_POOL)}]"
            )
        if self.count < 1:
            raise ValueError("count must be at least 1")
        if self.mean_length < 1:
            raise ValueError("mean_length must be at least 1")
        if self.length_jitter < 0 or self.length_jitter >= self.mean_length:
            raise ValueError("length_jitter must be in [0, mean_length)")
        if not 0.0 <= self.noise_rate <= 1.0:
            raise ValueError("noise_rate must be in [0, 1]")


@dataclass(frozen=True)
class ChainCodeRecord:
    """A labelled contour string over the eight chain-code directions."""

    label: str
    code: str

    def __post_init__(self):
        for ch in self.code:
            if ch not in "01234567":
                raise ValueError(f"chain codes use symbols 0-7, got {ch!r}")


def spec_alphabet(spec: DatasetSpec) -> Alphabet:
    return Alphabet.from_string(_SYMBOL_POOL[: spec.alphabet_size])


def gen_dataset(spec: DatasetSpec) -> StringSet:
    """Generate the set described by ``spec`` (deterministic in the seed)."""
    alphabet = spec_alphabet(spec)
    rng = np.random.default_rng(spec.seed)
    if spec.kind == "protein_like":
        members = _gen_protein(spec, alphabet, rng)
    elif spec.kind == "chaincode_like":
        members = _gen_chaincode(spec, alphabet, rng)
    else:
        center = _draw_center(spec, alphabet, rng)
        members = [_perturb(center, spec, alphabet, rng) for _ in range(spec.count)]
    return StringSet(tuple(members), alphabet)


def planted_center(spec: DatasetSpec) -> str:
    """The center string a ``perturbed_cluster`` spec grows its members from."""
    if spec.kind != "perturbed_cluster":
        raise ValueError("only perturbed_cluster sets have a planted center")
    alphabet = spec_alphabet(spec)
    rng = np.random.default_rng(spec.seed)
    return _draw_center(spec, alphabet, rng)


def _lengths(spec: DatasetSpec, rng) -> np.ndarray:
    lo = max(1, spec.mean_length - spec.length_jitter)
    hi = spec.mean_length + spec.length_jitter
    return rng.integers(lo, hi + 1, size=spec.count)


def _gen_protein(spec, alphabet, rng):
    lengths = _lengths(spec, rng)
    out = []
    for n in lengths:
        codes = rng.integers(0, alphabet.size, size=int(n))
        out.append(alphabet.decode(codes))
    return out


def _gen_chaincode(spec, alphabet, rng):
    """Markov walks: stay with p=.4, turn one step with p=.25 each, else jump."""
    k = alphabet.size
    lengths = _lengths(spec, rng)
    out = []
    for n in lengths:
        d = int(rng.integers(0, k))
        codes = [d]
        for _ in range(int(n) - 1):
            r = rng.random()
            if r < 0.4:
                pass
            elif r < 0.65:
                d = (d + 1) % k
            elif r < 0.9:
                d = (d - 1) % k
            else:
                d = int(rng.integers(0, k))
            codes.append(d)
        out.append(alphabet.decode(codes))
    return out


def _draw_center(spec, alphabet, rng):
    codes = rng.integers(0, alphabet.size, size=spec.mean_length)
    return alphabet.decode(codes)


def _perturb(center, spec, alphabet, rng):
    """Noisy copy: per gap maybe insert, per position maybe substitute/delete."""
    k = alphabet.size
    p = spec.noise_rate
    out = []
    for i in range(len(center) + 1):
        if rng.random() < p:
            out.append(alphabet.symbols[int(rng.integers(0, k))])
        if i == len(center):
            break
        ch = center[i]
        if rng.random() < p:
            if rng.random() < 0.5:
                # Substitute with a different symbol.
                shift = int(rng.integers(1, k))
                out.append(alphabet.symbols[(alphabet.code(ch) + shift) % k])
            # Otherwise delete: append nothing.
        else:
            out.append(ch)
    return "".join(out)


# ---------------------------------------------------------------------------
# String-set files


def save_strings(strset: StringSet, path) -> None:
    lines = [f"#alphabet: {''.join(strset.alphabet.symbols)}"]
    for i, member in enumerate(strset.members):
        label = strset.labels[i] if strset.labels is not None else None
        lines.append(f"{label}\t{member}" if label is not None else member)
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_strings(path) -> StringSet:
    text = Path(path).read_text(encoding="utf-8")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or not lines[0].startswith("#alphabet:"):
        raise ValueError(f"{path}: first line must be '#alphabet: <symbols>'")
    alphabet = Alphabet.from_string(lines[0][len("#alphabet:") :].strip())
    members: list[str] = []
    labels: list[str | None] = []
    for lineno, line in enumerate(lines[1:], start=2):
        if "\t" in line:
            label, member = line.split("\t", 1)
            labels.append(label)
        else:
            member = line
            labels.append(None)
        for ch in member:
            if ch not in alphabet:
                raise ValueError(
                    f"{path}:{lineno}: symbol {ch!r} not in declared alphabet"
                )
        members.append(member)
    if not members:
        raise ValueError(f"{path}: no members after the header")
    has_labels = any(l is not None for l in labels)
    return StringSet(
        tuple(members), alphabet, tuple(labels) if has_labels else None
    )


# ---------------------------------------------------------------------------
# Cost-matrix files


def _fmt_cost(value: float) -> str:
    if value == int(value):
        return str(int(value))
    return repr(value)


def save_cost_matrix(model: CostModel, path) -> None:
    """Canonical writer: symbols header, ``-`` for zero diagonals."""
    alphabet = model.alphabet
    header = list(alphabet.symbols) + [EPS_TOKEN]
    lines = ["\t".join(header)]
    n = alphabet.size + 1
    for a in range(n):
        row = []
        for b in range(n):
            v = model.costs[a, b]
            if a == b and v == 0.0:
                row.append("-")
            else:
                row.append(_fmt_cost(v))
        lines.append("\t".join(row))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_cost_matrix(path, alphabet: Alphabet | None = None) -> CostModel:
    """Read a cost matrix; the header defines (or must match) the alphabet."""
    text = Path(path).read_text(encoding="utf-8")
    lines = [ln for ln in text.split("\n") if ln != ""]
    if not lines:
        raise ValueError(f"{path}: empty cost-matrix file")
    header = lines[0].split("\t")
    if len(header) < 2 or header[-1] != EPS_TOKEN:
        raise ValueError(
            f"{path}:1: header must list the symbols and end with {EPS_TOKEN}"
        )
    file_alphabet = Alphabet.from_string("".join(header[:-1]))
    if alphabet is not None and alphabet.symbols != file_alphabet.symbols:
        raise ValueError(
            f"{path}: matrix alphabet {''.join(file_alphabet.symbols)!r} does not "
            f"match the expected {''.join(alphabet.symbols)!r}"
        )
    alphabet = file_alphabet
    n = alphabet.size + 1
    if len(lines) - 1 != n:
        raise ValueError(f"{path}: expected {n} matrix rows, found {len(lines) - 1}")
    mat = np.zeros((n, n), dtype=np.float64)
    for a, line in enumerate(lines[1:]):
        cells = line.split("\t")
        if len(cells) != n:
            raise ValueError(
                f"{path}:{a + 2}: expected {n} columns, found {len(cells)}"
            )
        for b, cell in enumerate(cells):
            if cell == "-":
                if a != b:
                    raise ValueError(
                        f"{path}:{a + 2}: '-' is only allowed on the diagonal"
                    )
                mat[a, b] = 0.0
                continue
            try:
                mat[a, b] = float(cell)
            except ValueError:
                raise ValueError(
                    f"{path}:{a + 2}: {cell!r} is not a number"
                ) from None
    model = CostModel(alphabet, mat)
    model.validate()
    return model


def builtin_table1() -> CostModel:
    """The worked-example cost model over the four symbols 0, 1, 2, 4."""
    alphabet = Alphabet.from_string("0124")
    mat = np.array(
        [
            [0.0, 1.0, 2.0, 4.0, 2.0],
            [1.0, 0.0, 1.0, 3.0, 2.0],
            [2.0, 1.0, 0.0, 2.0, 2.0],
            [4.0, 3.0, 2.0, 0.0, 2.0],
            [2.0, 2.0, 2.0, 2.0, 0.0],
        ]
    )
    model = CostModel(alphabet, mat)
    model.validate()
    return model
