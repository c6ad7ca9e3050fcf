"""Text, query and report serialization.

Texts with at most 24 prime characters render as letters ``a, b, ...``
with ``#`` and ``$`` literal. Larger alphabets use a header line
followed by whitespace-separated integer symbols.
"""
from __future__ import annotations

import json
import string
import sys
from pathlib import Path

import numpy as np

from jumbled_lab.conv3sum import Conv3SumInstance
from jumbled_lab.errors import UsageError
from jumbled_lab.parikh import DOLLAR, HASH, PRIME, Alphabet, JIText

MAX_LETTERS = 24
HEADER = "%jumbled-text"
SCHEMA = 1


def _letters(alphabet: Alphabet):
    letters, next_letter = [], 0
    for role in alphabet.roles:
        if role == HASH:
            letters.append("#")
        elif role == DOLLAR:
            letters.append("$")
        else:
            letters.append(string.ascii_lowercase[next_letter])
            next_letter += 1
    return letters


def render_text(text: JIText) -> str:
    alphabet = text.alphabet
    if sum(r not in (HASH, DOLLAR) for r in alphabet.roles) <= MAX_LETTERS:
        table = np.array(_letters(alphabet))
        return "".join(table[text.symbols].tolist())
    roles = ",".join(r or "-" for r in alphabet.roles)
    body = " ".join(map(str, text.symbols.tolist()))
    return f"{HEADER} size={alphabet.size} roles={roles}\n{body}\n"


def parse_text(data: str, alphabet: Alphabet = None) -> JIText:
    """Inverse of :func:`render_text`.

    Letter-form text carries no role metadata, so ``alphabet`` should be
    given; without it, ``#`` and ``$`` (when present) are taken as
    separators following the lettered symbols.
    """
    if data.startswith(HEADER):
        header, _, body = data.partition("\n")
        fields = dict(f.split("=", 1) for f in header.split()[1:])
        roles = tuple(None if r == "-" else r for r in fields["roles"].split(","))
        alphabet = Alphabet(int(fields["size"]), roles)
        return JIText([int(t) for t in body.split()], alphabet)
    data = data.strip()
    if alphabet is None:
        seps = [c for c in "#$" if c in data]
        k = max((ord(c) - ord("a") + 1 for c in set(data) if c.islower()), default=0)
        roles = (PRIME,) * k + tuple(HASH if c == "#" else DOLLAR for c in seps)
        alphabet = Alphabet(len(roles), roles)
    return JIText.from_string(data, _letters(alphabet), alphabet)


def queries_as_json(construction) -> list:
    out = []
    for L in range(1, construction.instance.n):
        for q in construction.queries(L):
            out.append({"L": q.L, "subset_mask": q.mask, "counts": list(q.psi.counts)})
    return out


def write_artifacts(construction, directory) -> Path:
    """Dump instance, rendered text and query family into ``directory``."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    (directory / "instance.json").write_text(construction.instance.to_json())
    (directory / "text.txt").write_text(render_text(construction.text))
    (directory / "queries.json").write_text(
        json.dumps(queries_as_json(construction), separators=(",", ":")) + "\n")
    return directory


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def load_instance(path) -> Conv3SumInstance:
    raw = sys.stdin.read() if str(path) == "-" else Path(path).read_text()
    try:
        return Conv3SumInstance.from_json(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: not valid JSON ({exc})") from None
