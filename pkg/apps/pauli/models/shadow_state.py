from dataclasses import dataclass

from _library.error_codes import LENGTH_MISMATCH_ERROR, PARAMETER_DOMAIN_ERROR
from _library.exceptions import DomainError, ShapeMismatchError
from apps.pauli.models.choices import FRAME_LETTERS, LETTER_TO_FRAME


@dataclass(frozen=True)
class ShadowState:
    """
    Pauli basis state |b; s> of B_6^n: site i is the eigenstate of the frame-b_i
    Pauli with eigenvalue (-1)^{s_i}.
    """

    frames: tuple[int, ...]
    outcomes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "frames", tuple(int(b) for b in self.frames))
        object.__setattr__(self, "outcomes", tuple(int(s) for s in self.outcomes))
        if len(self.frames) != len(self.outcomes):
            raise ShapeMismatchError(LENGTH_MISMATCH_ERROR, frames=len(self.frames), outcomes=len(self.outcomes))
        if any(b not in (1, 2, 3) for b in self.frames):
            raise DomainError(PARAMETER_DOMAIN_ERROR, field="frames", value=self.frames, info="frames are 1..3")
        if any(s not in (0, 1) for s in self.outcomes):
            raise DomainError(PARAMETER_DOMAIN_ERROR, field="outcomes", value=self.outcomes, info="outcomes are bits")

    @property
    def n(self) -> int:
        return len(self.frames)

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(2 * (b - 1) + s for b, s in zip(self.frames, self.outcomes, strict=True))

    @classmethod
    def from_letters(cls, letters) -> "ShadowState":
        letters = [int(letter) for letter in letters]
        return cls(frames=tuple(letter // 2 + 1 for letter in letters), outcomes=tuple(letter % 2 for letter in letters))

    @classmethod
    def from_text(cls, text: str) -> "ShadowState":
        """
        Parse "XZY/010".
        """
        try:
            frame_text, outcome_text = text.strip().split("/")
            frames = tuple(LETTER_TO_FRAME[letter] for letter in frame_text.upper())
            outcomes = tuple(int(bit) for bit in outcome_text)
        except (ValueError, KeyError) as e:
            raise DomainError(PARAMETER_DOMAIN_ERROR, field="text", value=text, info=str(e)) from e
        return cls(frames=frames, outcomes=outcomes)

    def __str__(self) -> str:
        return "".join(FRAME_LETTERS[b] for b in self.frames) + "/" + "".join(str(s) for s in self.outcomes)
