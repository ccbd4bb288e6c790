# SPDX-License-Identifier: BSD-2-Clause
# Copyright  (c) 2024, the 'bohrlab' Developers. All rights reserved.

class DomainError(ValueError):
    """
        Exception indicating an argument lies outside the mathematical domain
    """

    pass


class ConfigurationError(ValueError):
    """
        Exception indicating inconsistent numeric settings
    """

    pass


class CertificationError(RuntimeError):
    """
        Exception indicating a rigorous bound could not be established
    """

    pass


class NumericError(ArithmeticError):
    """
        Exception indicating a non-finite or otherwise unusable numeric result
    """

    pass


class RootNotFoundError(LookupError):
    """
        Exception indicating no root was found where one is required
    """

    pass
