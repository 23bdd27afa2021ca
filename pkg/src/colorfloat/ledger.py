"""Per-chain token-contract state and the primitive ledger operations.

Every token is attributed to the minter that created it, identified by a
numeric color id. The token contract keeps two per-color counters:

* ``mints[c]``  -- how many tokens are currently attributed to color ``c``
  on this chain.
* ``floats[c]`` -- how many of those tokens are currently wrapped into
  uncolored float tokens.

Wallet balances are stored in constant space as an :class:`EncodedBalance`:
at most ``k`` colored slots held losslessly plus one uncolored float
quantity. Quantities are unsigned integers throughout; any operation that
would drive a counter negative raises instead of wrapping around, and a
failed operation leaves the ledger exactly as it found it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import FloatInvariantError, LedgerUnderflowError

Color = int
Quantity = int


def _check_quantity(value: int, what: str = "quantity") -> None:
    if value < 0:
        raise ValueError(f"{what} must be non-negative, got {value}")


@dataclass
class ColorLedger:
    """Mint and float bookkeeping for a single chain.

    Absent keys read as zero and entries are pruned when they reach zero,
    so two ledgers that went through different histories but reached the
    same balances compare equal.
    """

    chain: int = 0
    mints: dict[Color, Quantity] = field(default_factory=dict)
    floats: dict[Color, Quantity] = field(default_factory=dict)

    def mint_of(self, color: Color) -> Quantity:
        return self.mints.get(color, 0)

    def float_of(self, color: Color) -> Quantity:
        return self.floats.get(color, 0)

    def total_mint(self) -> Quantity:
        return sum(self.mints.values())

    def total_float(self) -> Quantity:
        return sum(self.floats.values())

    def colors(self) -> list[Color]:
        """All colors with nonzero mint or float, ascending."""
        return sorted(self.mints.keys() | self.floats.keys())

    def mint(self, color: Color, quantity: Quantity) -> None:
        """Attribute ``quantity`` newly created tokens to ``color``."""
        _check_quantity(quantity)
        if quantity == 0:
            return
        self.mints[color] = self.mints.get(color, 0) + quantity

    def burn(self, color: Color, quantity: Quantity) -> None:
        """Remove ``quantity`` tokens from ``color``'s mint.

        Only the unwrapped part of the mint may be burned directly; callers
        holding float-backed tokens must defloat first so the float ledger
        can never exceed the mint.
        """
        _check_quantity(quantity)
        burnable = self.mint_of(color) - self.float_of(color)
        if quantity > burnable:
            raise LedgerUnderflowError(
                f"burn of {quantity} exceeds burnable mint {burnable} for color "
                f"{color} (mint={self.mint_of(color)}, float={self.float_of(color)}); "
                "defloat before burning wrapped tokens"
            )
        if quantity == 0:
            return
        remaining = self.mints[color] - quantity
        if remaining:
            self.mints[color] = remaining
        else:
            del self.mints[color]

    def wrap(self, color: Color, quantity: Quantity) -> Quantity:
        """Convert ``quantity`` colored tokens into float tokens; returns the amount wrapped."""
        _check_quantity(quantity)
        if self.float_of(color) + quantity > self.mint_of(color):
            raise FloatInvariantError(
                f"wrapping {quantity} of color {color} would push float to "
                f"{self.float_of(color) + quantity}, above mint {self.mint_of(color)}"
            )
        if quantity:
            self.floats[color] = self.floats.get(color, 0) + quantity
        return quantity

    def unwrap(self, color: Color, quantity: Quantity) -> Quantity:
        """Convert up to ``quantity`` of ``color``'s float back into colored form.

        Returns the amount actually unwrapped, capped by the color's
        current float balance.
        """
        _check_quantity(quantity)
        got = min(self.float_of(color), quantity)
        if got:
            remaining = self.floats[color] - got
            if remaining:
                self.floats[color] = remaining
            else:
                del self.floats[color]
        return got

    def copy(self) -> "ColorLedger":
        return ColorLedger(self.chain, dict(self.mints), dict(self.floats))


@dataclass(frozen=True)
class EncodedBalance:
    """Constant-space wallet balance: up to ``k`` colored slots plus a float quantity.

    Slots are normalized on construction: zero-balance slots are dropped and
    the rest are stored in canonical order (descending balance, ties broken
    by ascending color id), so equal balances are structurally identical.
    ``k = 1`` is the single-slot encoding; larger ``k`` keeps more colors
    lossless per wallet.
    """

    slots: tuple[tuple[Color, Quantity], ...] = ()
    float_balance: Quantity = 0
    k: int = 1

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"encoding width k must be at least 1, got {self.k}")
        _check_quantity(self.float_balance, "float balance")
        seen: set[Color] = set()
        cleaned: list[tuple[Color, Quantity]] = []
        for color, qty in self.slots:
            _check_quantity(qty, f"slot balance for color {color}")
            if color in seen:
                raise ValueError(f"duplicate slot color {color}")
            seen.add(color)
            if qty:
                cleaned.append((color, qty))
        cleaned.sort(key=lambda slot: (-slot[1], slot[0]))
        if len(cleaned) > self.k:
            raise ValueError(f"{len(cleaned)} nonzero slots exceed encoding width {self.k}")
        object.__setattr__(self, "slots", tuple(cleaned))

    @property
    def total(self) -> Quantity:
        return sum(qty for _, qty in self.slots) + self.float_balance

    @property
    def main_color(self) -> Color | None:
        """Color of the largest slot, or None for an all-float or empty wallet."""
        return self.slots[0][0] if self.slots else None

    @property
    def is_empty(self) -> bool:
        return not self.slots and self.float_balance == 0

    def slot_balance(self, color: Color) -> Quantity:
        for slot_color, qty in self.slots:
            if slot_color == color:
                return qty
        return 0

    def slot_colors(self) -> tuple[Color, ...]:
        return tuple(color for color, _ in self.slots)

    def notation(self) -> str:
        """Compact text form: ``color:balance`` segments then the float, e.g. ``1:40|30``."""
        parts = [f"{color}:{qty}" for color, qty in self.slots]
        if not parts:
            parts = ["-"]
        return "|".join(parts) + f"|{self.float_balance}"


def empty_balance(k: int = 1) -> EncodedBalance:
    return EncodedBalance((), 0, k)


# A debited balance has the same shape as a wallet balance; it exists only
# between a debit and the matching credit or burn, and always totals the
# requested debit quantity.
DebitedBalance = EncodedBalance
