from dataclasses import dataclass, field
from functools import cached_property

from _library.error_codes import PARAMETER_DOMAIN_ERROR
from _library.exceptions import DomainError
from apps.pauli.models.choices import PAULI_LETTERS


@dataclass(frozen=True, slots=False)
class PauliString:
    """
    n-site Pauli word, bit-packed with 2 bits per site (site i in bits 2i, 2i+1).

    The computational-basis masks follow the Kronecker convention used
    everywhere in the lab: site 0 is the leftmost factor, i.e. bit n-1-i of a
    basis index.
    """

    n: int
    packed: int = field(default=0)

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(PARAMETER_DOMAIN_ERROR, field="n", value=self.n)
        if self.packed < 0 or self.packed >= 1 << (2 * self.n):
            raise DomainError(PARAMETER_DOMAIN_ERROR, field="packed", value=self.packed)

    # -------------------------
    # Constructors
    # -------------------------
    @classmethod
    def from_codes(cls, codes) -> "PauliString":
        packed = 0
        for site, code in enumerate(codes):
            code = int(code)
            if code not in (0, 1, 2, 3):
                raise DomainError(PARAMETER_DOMAIN_ERROR, field="codes", value=code, info="Pauli codes are 0..3")
            packed |= code << (2 * site)
        return cls(n=len(codes), packed=packed)

    @classmethod
    def from_text(cls, text: str) -> "PauliString":
        text = text.strip().upper()
        if any(letter not in PAULI_LETTERS for letter in text):
            raise DomainError(PARAMETER_DOMAIN_ERROR, field="text", value=text, info="Pauli words use I, X, Y, Z")
        return cls.from_codes([PAULI_LETTERS.index(letter) for letter in text])

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(n=n, packed=0)

    @classmethod
    def on_sites(cls, n: int, sites, codes) -> "PauliString":
        """
        Word acting with `codes[j]` on `sites[j]` and identity elsewhere.
        """
        full = [0] * n
        for site, code in zip(sites, codes, strict=True):
            full[site] = int(code)
        return cls.from_codes(full)

    # -------------------------
    # Views
    # -------------------------
    def code(self, site: int) -> int:
        return (self.packed >> (2 * site)) & 3

    @cached_property
    def codes(self) -> tuple[int, ...]:
        return tuple(self.code(site) for site in range(self.n))

    @cached_property
    def x_mask(self) -> int:
        mask = 0
        for site, code in enumerate(self.codes):
            if code in (1, 2):
                mask |= 1 << (self.n - 1 - site)
        return mask

    @cached_property
    def z_mask(self) -> int:
        mask = 0
        for site, code in enumerate(self.codes):
            if code in (2, 3):
                mask |= 1 << (self.n - 1 - site)
        return mask

    @cached_property
    def y_count(self) -> int:
        return sum(1 for code in self.codes if code == 2)

    @cached_property
    def weight(self) -> int:
        return sum(1 for code in self.codes if code)

    def padded(self, total: int) -> "PauliString":
        """
        Same word on the first n qubits of a `total`-qubit register.
        """
        return PauliString.from_codes(self.codes + (0,) * (total - self.n))

    def __str__(self) -> str:
        return "".join(PAULI_LETTERS[code] for code in self.codes)
