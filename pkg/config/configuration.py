import os
import logging
from dotenv import load_dotenv


logger = logging.getLogger(__name__)
load_dotenv()

DEFAULT_SEED = 20240101


def _int_setting(name: str, default: int) -> int:
    """
    Read an integer setting from the environment.
    :param name: environment variable name
    :param default: value used when the variable is unset or malformed
    :return: the parsed integer
    """
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning("Ignoring malformed %s=%r, using %s", name, raw, default)
        return default


LOG_FILE = os.getenv("NETLAB_LOG_FILE", "netlab.log")
LOG_LEVEL = os.getenv("NETLAB_LOG_LEVEL", "INFO").upper()

# random-evaluation identity testing
IDENTITY_DRAWS = max(3, _int_setting("NETLAB_IDENTITY_DRAWS", 3))
RANDOM_RANGE = max(2, _int_setting("NETLAB_RANDOM_RANGE", 10 ** 6))

# enumeration guards
EXPLOSION_CAP = _int_setting("NETLAB_EXPLOSION_CAP", 10000)
TRUNCATION_SLACK = max(2, _int_setting("NETLAB_TRUNCATION_SLACK", 2))


def resolve_seed(cli_seed=None) -> int:
    """
    The environment variable NETLAB_SEED wins over the command line flag, which
    wins over the built-in default.
    :param cli_seed: value passed with --seed, or None
    :return: the seed to use for every random draw of this run
    """
    env_seed = os.getenv("NETLAB_SEED")
    if env_seed is not None and env_seed.strip() != "":
        try:
            return int(env_seed)
        except ValueError:
            logger.warning("Ignoring malformed NETLAB_SEED=%r", env_seed)
    if cli_seed is not None:
        return int(cli_seed)
    return DEFAULT_SEED
