"""Identity testing by evaluation at random rationals.

Two rational expressions that agree at several independent random points
drawn from a large range are equal with overwhelming probability.
"""
import logging
from random import Random
from typing import Callable, Dict, Optional, Sequence

from config import configuration as config
from errors import ZeroDenominator
from sympy.polys.domains import QQ

logger = logging.getLogger(__name__)


def random_rational(rng: Random, bound: Optional[int] = None, positive: bool = True):
    bound = bound or config.RANDOM_RANGE
    numerator = rng.randint(1, bound)
    if not positive and rng.random() < 0.5:
        numerator = -numerator
    return QQ(numerator, rng.randint(1, bound))


def random_assignment(names: Sequence[str], rng: Random, bound: Optional[int] = None,
                      positive: bool = True) -> Dict[str, object]:
    return {name: random_rational(rng, bound, positive) for name in names}


def identity_holds(lhs: Callable[[Dict[str, object]], object],
                   rhs: Callable[[Dict[str, object]], object],
                   names: Sequence[str], rng: Random, draws: Optional[int] = None,
                   positive: bool = True) -> bool:
    """
    Compare two callables at independent random rational assignments.
    :param lhs: assignment -> exact value
    :param rhs: assignment -> exact value
    :param names: variables to draw
    :param rng: seeded random source
    :param draws: number of points, at least config.IDENTITY_DRAWS
    :return: True when every draw agrees
    """
    draws = max(draws or 0, config.IDENTITY_DRAWS)
    done = 0
    attempts = 0
    while done < draws:
        attempts += 1
        if attempts > 10 * draws:
            raise ZeroDenominator("could not find evaluation points avoiding poles")
        point = random_assignment(names, rng, positive=positive)
        try:
            left, right = lhs(point), rhs(point)
        except ZeroDenominator:
            logger.debug("Skipping a draw that hit a pole")
            continue
        if left != right:
            logger.info("Identity failed at %s: %s != %s", point, left, right)
            return False
        done += 1
    return True
