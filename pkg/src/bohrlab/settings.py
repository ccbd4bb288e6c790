# SPDX-License-Identifier: BSD-2-Clause
# Copyright  (c) 2024, the 'bohrlab' Developers. All rights reserved.

import json
import os
import pathlib
import logging
import logging.handlers

from .exceptions import ConfigurationError

logging.basicConfig(
    format='%(asctime)s %(levelname)s %(message)s [%(name)s:%(lineno)d]',
    level=logging.INFO,
    datefmt='%Y-%m-%d %H:%M:%S'
)


def get_logfile() -> pathlib.Path:
    return pathlib.Path(os.getenv('BOHRLAB_LOG_FILE', "./.bohrlab/bohrlab.log"))


def get_logger(name):
    logger = logging.getLogger(name)
    if any(isinstance(h, logging.handlers.RotatingFileHandler) for h in logger.handlers):
        return logger
    formatter = logging.Formatter('%(asctime)s %(levelname)s %(message)s [%(name)s]', datefmt='%Y-%m-%d %H:%M:%S')
    try:
        os.makedirs(get_logfile().parent, exist_ok=True)
        file_handler = logging.handlers.RotatingFileHandler(get_logfile(), maxBytes=5_000_000, backupCount=5)
    except OSError as e:
        logger.warning(f"Logging to console only, cannot open {get_logfile()}: {e}")
        return logger
    file_handler.setLevel(logging.INFO)
    file_handler.setFormatter(formatter)
    logger.addHandler(file_handler)
    return logger


logger = get_logger(__file__)

DEFAULTS = {
    'seed': 0,
    'trials': 1000,
    'truncation': 256,
    'tolerance': 1e-8,
    'root_tolerance': 1e-13,
    'radius_tolerance': 1e-12,
    'scan_step': 1e-4,
    'max_blaschke_degree': 12,
    'zero_cap': 0.95,
    'scheduler': 'threads',
    'partitions': 8,
}


def get_settings_file() -> pathlib.Path:
    return pathlib.Path(os.getenv('BOHRLAB_SETTINGS_FILE', "./.bohrlab/settings.json"))


def get_settings() -> dict:
    """
    Defaults overlaid with the JSON settings file, if one exists.
    """
    settings = dict(DEFAULTS)
    try:
        with open(get_settings_file(), 'r') as f:
            try:
                loaded = json.load(f)
            except json.JSONDecodeError as e:
                logger.error(f"Error decoding json file {f.name}: {e}")
                return settings
    except FileNotFoundError:
        logger.debug(f'No settings file at {get_settings_file()}, using defaults')
        return settings
    if not isinstance(loaded, dict):
        logger.error(f"Settings file {get_settings_file()} does not contain a JSON object")
        return settings
    unknown = set(loaded) - set(DEFAULTS)
    if unknown:
        logger.warning(f"Ignoring unknown settings {sorted(unknown)}")
    settings.update({k: v for k, v in loaded.items() if k in DEFAULTS})
    return settings


def get_setting(*args):
    settings = get_settings()
    if len(args) == 1:
        return settings.get(args[0])
    return [settings.get(arg) for arg in args]


def get_seed(seed: int = None) -> int:
    """
    BOHRLAB_SEED wins over an explicit seed, which wins over the settings file.
    """
    env_seed = os.getenv('BOHRLAB_SEED')
    if env_seed is not None and env_seed != "":
        try:
            value = int(env_seed)
        except ValueError:
            raise ConfigurationError(f"BOHRLAB_SEED={env_seed!r} is not an integer")
        if seed is not None and value != seed:
            logger.info(f"BOHRLAB_SEED={env_seed} overrides seed {seed}")
        return value
    if seed is not None:
        return seed
    return get_setting('seed')


# Provenance of a computed radius
PROVENANCE_ROOT_FOUND = 'root_found'
PROVENANCE_CLOSED_FORM = 'closed_form'
PROVENANCE_OPTIMIZED = 'optimized'

# Radius labels
RADIUS_THEOREM1 = 'theorem1'
RADIUS_CLOSED_FORM_R_STAR = 'closed_form_r_star'
RADIUS_SUBORDINATION = 'subordination'
RADIUS_REMARK1_IMPROVED = 'remark1_improved'
RADIUS_COROLLARY5 = 'corollary5'
RADIUS_ABS_LOWER = 'abs_lower'

# Root refinement methods
METHOD_BISECTION = 'bisection'
METHOD_BISECTION_NEWTON = 'bisection+newton'

# Verification suites, in the order `verify --suite all` runs them
SUITE_THEOREM1 = 'theorem1'
SUITE_LEMMA1 = 'lemma1'
SUITE_LEMMA2 = 'lemma2'
SUITE_SCHWARZ_PICK = 'schwarzpick'
SUITE_CLASSICAL = 'classical'
SUITE_EQ6 = 'eq6'
SUITE_THEOREM2 = 'theorem2'
SUITE_REMARK2 = 'remark2'
ALL_SUITES = [
    SUITE_THEOREM1,
    SUITE_LEMMA1,
    SUITE_LEMMA2,
    SUITE_SCHWARZ_PICK,
    SUITE_CLASSICAL,
    SUITE_EQ6,
    SUITE_THEOREM2,
    SUITE_REMARK2,
]

OUTPUT_FORMAT_VERSION = '1.0'
