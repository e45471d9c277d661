# tiling1d/substitution.py
"""
Symbolic one-dimensional substitutions.

Words are tuples of letter names so that collared alphabets (``A1``, ``B2``,
``1_2``) behave like single letters. Rule strings are tokenized greedily
against the alphabet unless the image is whitespace separated.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from abelian import IntMatrix
from common.errors import InputError, NotIntertwining, NotPrimitive
from common.logger import get_logger
from common.schema import K_ALPHABET, K_RULES, require

log = get_logger(__name__)

Word = tuple[str, ...]

_RULE_SPLIT = re.compile(r"[,;\n]+")
_ARROW = re.compile(r"\s*(?:->|→|=>)\s*")


def tokenize(text: str, alphabet: Sequence[str]) -> Word:
    text = text.strip()
    if not text:
        return ()
    if any(ch.isspace() for ch in text):
        word = tuple(text.split())
    else:
        letters = sorted(alphabet, key=len, reverse=True)
        out, i = [], 0
        while i < len(text):
            hit = next((a for a in letters if text.startswith(a, i)), None)
            if hit is None:
                raise InputError(f"cannot read '{text[i:]}' as letters of {list(alphabet)}")
            out.append(hit)
            i += len(hit)
        word = tuple(out)
    unknown = [a for a in word if a not in alphabet]
    if unknown:
        raise InputError(f"unknown letters {unknown} in '{text}'")
    return word


def render_word(word: Iterable[str]) -> str:
    word = tuple(word)
    return "".join(word) if all(len(a) == 1 for a in word) else " ".join(word)


@dataclass(frozen=True)
class Substitution1D:
    alphabet: tuple[str, ...]
    rules: tuple[tuple[str, Word], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if not self.alphabet:
            raise InputError("empty alphabet")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise InputError("repeated letters in the alphabet")
        given = dict(self.rules)
        if set(given) != set(self.alphabet) or len(given) != len(self.rules):
            raise InputError("exactly one rule per letter is required")
        for a, img in given.items():
            if not img:
                raise InputError(f"image of {a} is empty")
            bad = [b for b in img if b not in given]
            if bad:
                raise InputError(f"image of {a} uses unknown letters {bad}")
        # rules in alphabet order so equality ignores input order
        object.__setattr__(self, "rules", tuple((a, tuple(given[a])) for a in self.alphabet))

    # ---------- construction ----------

    @classmethod
    def build(cls, rules: Mapping[str, Sequence[str] | str], name: str = "") -> "Substitution1D":
        alphabet = tuple(rules)
        parsed = {a: tokenize(v, alphabet) if isinstance(v, str) else tuple(v) for a, v in rules.items()}
        return cls(alphabet, tuple(parsed.items()), name)

    @classmethod
    def parse(cls, text: str, name: str = "") -> "Substitution1D":
        """``"1->21, 2->11"``; rules separated by commas, semicolons or newlines."""
        pairs = []
        for chunk in _RULE_SPLIT.split(text):
            if not chunk.strip():
                continue
            parts = _ARROW.split(chunk.strip())
            if len(parts) != 2 or not parts[0]:
                raise InputError(f"cannot parse rule '{chunk.strip()}'")
            pairs.append((parts[0].strip(), parts[1]))
        if not pairs:
            raise InputError("no rules given")
        return cls.build(dict(pairs), name=name or text.strip())

    def to_json(self) -> dict:
        return {
            "name": self.name,
            K_ALPHABET: list(self.alphabet),
            K_RULES: {a: render_word(img) for a, img in self.rules},
        }

    @classmethod
    def from_json(cls, payload: dict, where: str = "substitution") -> "Substitution1D":
        rules = require(payload, K_RULES, dict, where)
        alphabet = payload.get(K_ALPHABET, list(rules))
        if set(alphabet) != set(rules):
            raise InputError(f"{where}: alphabet and rules disagree")
        ordered = {a: rules[a] for a in alphabet}
        return cls.build(ordered, name=str(payload.get("name", where)))

    def __str__(self) -> str:
        return ", ".join(f"{a}->{render_word(img)}" for a, img in self.rules)

    # ---------- action ----------

    @cached_property
    def _table(self) -> dict[str, Word]:
        return dict(self.rules)

    def image(self, a: str) -> Word:
        return self._table[a]

    def apply(self, word: Iterable[str]) -> Word:
        return tuple(b for a in word for b in self._table[a])

    def iterate(self, word: Iterable[str], n: int) -> Word:
        w = tuple(word)
        for _ in range(n):
            w = self.apply(w)
        return w

    def constant_length(self) -> int | None:
        lengths = {len(img) for _, img in self.rules}
        return lengths.pop() if len(lengths) == 1 else None

    def mirror(self) -> "Substitution1D":
        """Every image read right to left."""
        return Substitution1D(
            self.alphabet,
            tuple((a, tuple(reversed(img))) for a, img in self.rules),
            f"{self.name}~" if self.name else "",
        )

    # ---------- primitivity ----------

    def abelianization(self) -> IntMatrix:
        """M[b][a] = number of b in the image of a."""
        idx = {a: i for i, a in enumerate(self.alphabet)}
        n = len(self.alphabet)
        rows = [[0] * n for _ in range(n)]
        for a, img in self.rules:
            for b in img:
                rows[idx[b]][idx[a]] += 1
        return IntMatrix.from_rows(rows, n)

    def is_primitive(self) -> bool:
        if max(len(img) for _, img in self.rules) < 2:
            return False
        n = len(self.alphabet)
        support = [[x > 0 for x in row] for row in self.abelianization().to_rows()]
        power = support
        for _ in range((n - 1) ** 2 + 1):
            if all(all(row) for row in power):
                return True
            power = [
                [any(power[i][k] and support[k][j] for k in range(n)) for j in range(n)]
                for i in range(n)
            ]
        return False

    def require_primitive(self) -> None:
        if not self.is_primitive():
            raise NotPrimitive(f"substitution {self} is not primitive")

    # ---------- language ----------

    def allowed_words(self, length: int) -> frozenset[Word]:
        """Words of the given length occurring in the substitution's language."""
        self.require_primitive()
        if length < 1:
            raise InputError("word length must be positive")
        words: set[Word] = set()
        for b in self.alphabet:
            w: Word = (b,)
            while len(w) < length:
                w = self.apply(w)
            words.update(w[i:i + length] for i in range(len(w) - length + 1))
        frontier = list(words)
        while frontier:
            w = self.apply(frontier.pop())
            for i in range(len(w) - length + 1):
                sub = w[i:i + length]
                if sub not in words:
                    words.add(sub)
                    frontier.append(sub)
        log.debug("language of %s at length %d: %d words", self, length, len(words))
        return frozenset(words)

    def collar(self) -> tuple["Substitution1D", "LetterMap"]:
        """
        Right collaring: letters (a, b) for each allowed word ab, named a1, a2, ...
        with followers ordered cyclically from the letter after a.
        """
        self.require_primitive()
        pairs = self.allowed_words(2)
        n = len(self.alphabet)
        pos = {a: i for i, a in enumerate(self.alphabet)}
        names: dict[tuple[str, str], str] = {}
        for a in self.alphabet:
            followers = sorted(
                (b for (x, b) in pairs if x == a), key=lambda b: (pos[b] - pos[a] - 1) % n
            )
            sep = "_" if a[-1].isdigit() else ""
            for i, b in enumerate(followers, start=1):
                names[(a, b)] = f"{a}{sep}{i}"
        rules = {}
        for (a, b), name in names.items():
            img = self.image(a)
            nxt = img[1:] + (self.image(b)[0],)
            rules[name] = tuple(names[(c, d)] for c, d in zip(img, nxt))
        collared = Substitution1D(tuple(rules), tuple(rules.items()), f"{self.name}+collar" if self.name else "")
        forget = LetterMap.build(collared, self, {name: a for (a, _), name in names.items()})
        log.info("collared %s into %d letters", self.name or self, len(collared.alphabet))
        return collared, forget


@dataclass(frozen=True)
class LetterMap:
    """Letter-to-letter map from one substitution's alphabet to another's."""
    source: Substitution1D
    target: Substitution1D
    mapping: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        m = dict(self.mapping)
        if set(m) != set(self.source.alphabet):
            raise InputError("letter map must cover the source alphabet")
        bad = [b for b in m.values() if b not in self.target.alphabet]
        if bad:
            raise InputError(f"letter map hits unknown target letters {bad}")

    @classmethod
    def build(cls, source: Substitution1D, target: Substitution1D, mapping: Mapping[str, str]) -> "LetterMap":
        ordered = [(a, mapping[a]) for a in source.alphabet if a in mapping]
        ordered += [(a, b) for a, b in mapping.items() if a not in source.alphabet]
        return cls(source, target, tuple(ordered))

    def __call__(self, a: str) -> str:
        return dict(self.mapping)[a]

    def apply(self, word: Iterable[str]) -> Word:
        m = dict(self.mapping)
        return tuple(m[a] for a in word)

    def induced_substitution(self) -> Substitution1D:
        """The substitution t' on the target alphabet with t' ∘ m = m ∘ s."""
        images: dict[str, Word] = {}
        for a in self.source.alphabet:
            b, img = self(a), self.apply(self.source.image(a))
            if images.setdefault(b, img) != img:
                raise NotIntertwining(
                    f"letters mapping to {b} have images {render_word(images[b])} and {render_word(img)}"
                )
        missing = [b for b in self.target.alphabet if b not in images]
        if missing:
            raise NotIntertwining(f"letter map misses target letters {missing}")
        return Substitution1D(
            self.target.alphabet, tuple((b, images[b]) for b in self.target.alphabet), self.target.name
        )

    def intertwines(self) -> bool:
        try:
            return self.induced_substitution() == self.target
        except NotIntertwining:
            return False

    def to_json(self) -> dict:
        return {"mapping": dict(self.mapping)}


# ---------- built-in substitutions ----------

def period_doubling() -> Substitution1D:
    return Substitution1D.parse("1->21, 2->11", name="PD")


def thue_morse() -> Substitution1D:
    return Substitution1D.parse("A->AB, B->BA", name="TM")


def solenoid(q: int = 2, letter: str = "a") -> Substitution1D:
    """a -> a^q, whose tiling space is the q-adic solenoid."""
    if q < 2:
        raise InputError("solenoid needs q >= 2")
    return Substitution1D((letter,), ((letter, (letter,) * q),), f"S{q}")
