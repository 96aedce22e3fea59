"""Atom encodings: bits, bytes, words and language atoms.

The three marker atoms fixed by convention:

    (:)        marks bit atoms
    ((:):)     marks byte atoms
    ((:):(:))  marks word atoms

A bit is ((:):) for 0 and ((:):(:)) for 1.  A byte is the byte marker over
its 8 bits, most significant first.  A word is the word marker on the left
and its bytes on the right.  A language atom carries unparsed source text:
the word "{}" on the left and the source bytes on the right.

All of these are invariant data once the marker definitions are installed.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional

from .terms import COLON, Coda, Data

BIT_MARKER = COLON                      # (:)
BYTE_MARKER = Coda((COLON,), ())        # ((:):)
WORD_MARKER = Coda((COLON,), (COLON,))  # ((:):(:))

BIT0 = Coda((BIT_MARKER,), ())
BIT1 = Coda((BIT_MARKER,), (COLON,))

LANG_NAME = "{}"


@lru_cache(maxsize=None)
def byte_atom(value: int) -> Coda:
    bits = tuple(BIT1 if (value >> i) & 1 else BIT0 for i in range(7, -1, -1))
    return Coda((BYTE_MARKER,), bits)


def bits(text: str) -> Data:
    """The byte-atom sequence encoding `text` (UTF-8)."""
    return tuple(byte_atom(b) for b in text.encode("utf-8"))


@lru_cache(maxsize=None)
def word(text: str) -> Coda:
    return Coda((WORD_MARKER,), bits(text))


WORD_LANG = word(LANG_NAME)


@lru_cache(maxsize=None)
def lang_atom(source: str) -> Coda:
    return Coda((WORD_LANG,), bits(source))


def _decode_byte(c: Coda) -> Optional[int]:
    if c.left != (BYTE_MARKER,) or len(c.right) != 8:
        return None
    value = 0
    for b in c.right:
        if b == BIT0:
            value = value << 1
        elif b == BIT1:
            value = (value << 1) | 1
        else:
            return None
    return value


def decode_bytes(d: Data) -> Optional[str]:
    out = bytearray()
    for c in d:
        v = _decode_byte(c)
        if v is None:
            return None
        out.append(v)
    try:
        return out.decode("utf-8")
    except UnicodeDecodeError:
        return None


def is_word_atom(c: Coda) -> bool:
    return c.left == (WORD_MARKER,) and decode_bytes(c.right) is not None


def word_text(c: Coda) -> Optional[str]:
    """The text of a word atom, or None if `c` is not one."""
    if c.left != (WORD_MARKER,):
        return None
    return decode_bytes(c.right)


def is_lang_atom(c: Coda) -> bool:
    return len(c.left) == 1 and c.left[0] == WORD_LANG


def lang_source(c: Coda) -> Optional[str]:
    if not is_lang_atom(c):
        return None
    return decode_bytes(c.right)
