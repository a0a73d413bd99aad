# commands.py
"""
Command registry and dispatch.

Each orbk command is a resource class registered under its name, the way
the web layer registers resources on routes. run_command() looks the name
up, checks that the input fits, runs it and turns any error into the
standard error payload and exit code.
"""

import importlib
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple, Type

from config import settings
from model.fingroup import FiniteMatrixGroup, close
from model.sector import InertiaDecomposition
from model.utils.errors import SemanticError, UnknownCommand, UnsupportedGeometry, handle_error
from api.validators import KIND_MATRIX_GROUP, KIND_WEIGHTED_PROJECTIVE, InputSpec

RESOURCE_MODULES = ('api.group', 'api.ring', 'api.goodmap', 'api.moduli', 'api.verify')


@dataclass(frozen=True)
class Flags:
    """Command-line flags shared by all commands."""

    sector: Tuple[int, ...] = ()
    classes: Tuple[int, ...] = ()
    element: Optional[str] = None
    c1a: Optional[Fraction] = None
    dim: Optional[int] = None
    genus: int = 0
    marks: Optional[int] = None
    iota: Tuple[Fraction, ...] = ()
    cap: Optional[int] = None
    axis: Tuple[int, ...] = ()
    order: Optional[int] = None
    action: Optional[int] = None

    @property
    def closure_cap(self) -> int:
        return self.cap if self.cap is not None else settings['ORBK_CAP']


class Command:
    """Base resource for one command."""

    name = ''
    needs_input = True
    kinds: Tuple[str, ...] = (KIND_MATRIX_GROUP, KIND_WEIGHTED_PROJECTIVE)

    def run(self, spec: Optional[InputSpec], flags: Flags) -> tuple:
        raise NotImplementedError

    # ── Helpers shared by resources ──

    @staticmethod
    def group(spec: InputSpec, flags: Flags) -> FiniteMatrixGroup:
        return close(spec.generators, flags.closure_cap)

    @classmethod
    def decomposition(cls, spec: InputSpec, flags: Flags) -> InertiaDecomposition:
        from services.sector_calculator import SectorCalculator
        return SectorCalculator.inertia(cls.group(spec, flags), spec.geometry)

    @staticmethod
    def header(spec: Optional[InputSpec], command: str) -> Dict:
        data = {'command': command}
        if spec is not None and spec.name:
            data['input'] = spec.name
        return data


class CommandRegistry:
    """Maps command names to resource classes."""

    def __init__(self):
        self.resources: Dict[str, Type[Command]] = {}

    def add_resource(self, resource_class: Type[Command], name: str):
        resource_class.name = name
        self.resources[name] = resource_class

    def get(self, name: str) -> Type[Command]:
        if name not in self.resources:
            raise UnknownCommand(
                f"Unknown command '{name}'",
                details={'commands': sorted(self.resources)}
            )
        return self.resources[name]

    @property
    def names(self):
        return sorted(self.resources)


registry = CommandRegistry()


def load_resources():
    """Import every resource module so that it registers its commands."""
    for module in RESOURCE_MODULES:
        importlib.import_module(module)


def run_command(command: str, spec: Optional[InputSpec], flags: Optional[Flags] = None) -> tuple:
    """
    Run one command.

    Args:
        command: command name
        spec: parsed input (None for commands without input)
        flags: command-line flags

    Returns:
        Tuple of (payload, exit code)
    """
    flags = flags or Flags()
    try:
        load_resources()
        resource = registry.get(command)()
        if resource.needs_input and spec is None:
            raise SemanticError(f"Command '{command}' needs an input file")
        if spec is not None and spec.kind not in resource.kinds:
            raise UnsupportedGeometry(
                f"Command '{command}' does not accept '{spec.kind}' input",
                details={'accepted': list(resource.kinds)}
            )
        return resource.run(spec, flags)
    except Exception as error:
        return handle_error(error)
