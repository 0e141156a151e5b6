"""Words over the free group on two generators.

The alphabet has four symbols: ``a`` and ``b`` for the generators and
``A`` / ``B`` for their inverses. Words are never freely reduced, so the
length of ``a A`` is 2 even though it represents the identity.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Tuple, Union

from common.errors import DomainError


class Letter(Enum):
    """One letter of a word in F2."""
    A = "a"
    A_INV = "A"
    B = "b"
    B_INV = "B"

    @property
    def inverse(self) -> "Letter":
        return _INVERSES[self]

    @property
    def generator(self) -> int:
        """0 for a / a^-1, 1 for b / b^-1."""
        return 0 if self in (Letter.A, Letter.A_INV) else 1

    @property
    def is_inverse(self) -> bool:
        return self in (Letter.A_INV, Letter.B_INV)

    def pretty(self) -> str:
        return {"a": "a", "A": "a⁻¹", "b": "b", "B": "b⁻¹"}[self.value]


_INVERSES = {
    Letter.A: Letter.A_INV,
    Letter.A_INV: Letter.A,
    Letter.B: Letter.B_INV,
    Letter.B_INV: Letter.B,
}

# Accepted spellings when parsing text
_TOKENS = {
    "a": Letter.A, "A": Letter.A_INV, "a^-1": Letter.A_INV, "a⁻¹": Letter.A_INV,
    "b": Letter.B, "B": Letter.B_INV, "b^-1": Letter.B_INV, "b⁻¹": Letter.B_INV,
}

# Order in which breadth-first traversals try the letters
LETTER_ORDER: Tuple[Letter, ...] = (Letter.A, Letter.A_INV, Letter.B, Letter.B_INV)


@dataclass(frozen=True)
class GeneratorWord:
    """A sequence of letters, applied left to right."""
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        for letter in letters:
            if not isinstance(letter, Letter):
                raise DomainError(f"not a letter: {letter!r}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text: str) -> "GeneratorWord":
        """Parse ``"a a b A"`` (space separated) or compact ``"aabA"``."""
        text = text.strip()
        if not text:
            return cls(())
        tokens = text.split() if " " in text else _split_compact(text)
        try:
            return cls(tuple(_TOKENS[token] for token in tokens))
        except KeyError as e:
            raise DomainError(f"unknown letter {e.args[0]!r} in word {text!r}") from None

    @classmethod
    def power(cls, letter: Letter, exponent: int) -> "GeneratorWord":
        if exponent < 0:
            letter, exponent = letter.inverse, -exponent
        return cls((letter,) * exponent)

    @property
    def length(self) -> int:
        return len(self.letters)

    def inverse(self) -> "GeneratorWord":
        return GeneratorWord(tuple(letter.inverse for letter in reversed(self.letters)))

    def __add__(self, other: Union["GeneratorWord", Letter]) -> "GeneratorWord":
        if isinstance(other, Letter):
            return GeneratorWord(self.letters + (other,))
        return GeneratorWord(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __str__(self) -> str:
        return " ".join(letter.value for letter in self.letters)

    def pretty(self) -> str:
        return " ".join(letter.pretty() for letter in self.letters) or "ε"


def _split_compact(text: str) -> Iterable[str]:
    tokens = []
    i = 0
    while i < len(text):
        if text.startswith("^-1", i + 1):
            tokens.append(text[i:i + 4])
            i += 4
        elif text.startswith("⁻¹", i + 1):
            tokens.append(text[i:i + 3])
            i += 3
        else:
            tokens.append(text[i])
            i += 1
    return tokens
