# -*- coding: utf-8 -*-

"""
moodal.verdict_colourer

This module implements a VerdictColourer class, colours any verdict words
found in a given string.
"""

import re
from colorama import Fore, Style


class VerdictColourer(object):
    """
    VerdictColourer adds colours to the outcome words printed by Moodal.
    """

    VERDICT_CODES = {
        "holds": Fore.GREEN,
        "fails": Fore.RED,
        "ok": Fore.GREEN,
        "invalid": Fore.RED,
        "Equivalent": Fore.GREEN,
        "Distinguished": Fore.RED,
        "WitnessFound": Fore.GREEN,
        "SeparatingPair": Fore.GREEN,
        "Exhausted": Fore.YELLOW,
        "TRUNCATED": Fore.YELLOW,
        "FAILED": Fore.RED,
        "PASSED": Fore.GREEN,
    }

    VERDICT_PATTERN = re.compile(r"\b({0})\b".format("|".join(VERDICT_CODES)))

    def colour(self, string):
        """
        Colours all verdict words in ``string``.

        :param string: A string to colour.
        :type string: str
        :returns: The string with all verdict words coloured.
        :rtype: str
        """
        return self.VERDICT_PATTERN.sub(
            lambda match: "{0}{1}{2}".format(
                self.VERDICT_CODES[match.group(1)], match.group(1), Style.RESET_ALL
            ),
            string,
        )
