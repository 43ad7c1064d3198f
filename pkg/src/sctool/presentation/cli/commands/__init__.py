"""
Commands module for sctool.

Author: DmitrTRC
"""

from sctool.presentation.cli.commands.base import BaseCommand
from sctool.presentation.cli.commands.committee import CommitteeCommand
from sctool.presentation.cli.commands.majority import (
    CheckDomainCommand,
    MajorityCommand,
)
from sctool.presentation.cli.commands.oracle import OracleCheckCommand
from sctool.presentation.cli.commands.trees import (
    GenerateCommand,
    RecognizeCommand,
    VerifyCommand,
)

__all__ = [
    "BaseCommand",
    "VerifyCommand",
    "RecognizeCommand",
    "GenerateCommand",
    "MajorityCommand",
    "CheckDomainCommand",
    "CommitteeCommand",
    "OracleCheckCommand",
]
