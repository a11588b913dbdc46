"""
Prime fields.
"""
from cached_property import cached_property

from bigradedpd.exc import FieldError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


class PrimeField(object):
    """
    The field Z/p of integers modulo a prime ``p``; elements are ints in ``[0, p)``.
    """

    def __init__(self, p: int = 2):
        if not _is_prime(p):
            raise FieldError("Field characteristic must be prime, got {}".format(p))
        self.p = p

    def __repr__(self):
        return "<PrimeField p={}>".format(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(self.p)

    zero = 0
    one = 1

    def element(self, value: int) -> int:
        return value % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise FieldError("Division by zero in Z/{}".format(self.p))
        return self._inverses[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    @cached_property
    def _inverses(self):
        # fermat
        return [0] + [pow(a, self.p - 2, self.p) for a in range(1, self.p)]


GF2 = PrimeField(2)


def coerce_field(field) -> PrimeField:
    """
    Accepts a :class:`PrimeField` or a characteristic.
    """
    if isinstance(field, PrimeField):
        return field
    return PrimeField(int(field))
