"""
Report builders behind the command-line subcommands
"""

from .base import INPUT_ERRORS, Command
from .cartier import cartier_command, cmd_cartier
from .di_check import cmd_di_check, di_check_command
from .example1 import cmd_example1, example1_command
from .h1dr import cmd_h1dr, h1dr_command
from .pairing import cmd_pairing, pairing_command
from .residues import cmd_residues, residues_command

COMMANDS = {
    command.name: command
    for command in (
        h1dr_command,
        pairing_command,
        residues_command,
        cartier_command,
        di_check_command,
        example1_command,
    )
}

__all__ = [
    "INPUT_ERRORS",
    "Command",
    "COMMANDS",
    "cmd_cartier",
    "cmd_di_check",
    "cmd_example1",
    "cmd_h1dr",
    "cmd_pairing",
    "cmd_residues",
]
