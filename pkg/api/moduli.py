# moduli.py
"""
Moduli commands: kpoint (constant-map counts on [pt/G]) and vdim (virtual dimension).
"""

from fractions import Fraction

from api.commands import Command, registry
from api.validators import KIND_MATRIX_GROUP
from model.utils.errors import SemanticError
from model.utils.response import ReportResponse, render_rational
from services.goodmap_calculator import GoodMapCalculator
from services.moduli_calculator import DimensionInput, ModuliCalculator, SectorTuple


class ModuliAPI:

    class _KPOINT(Command):
        kinds = (KIND_MATRIX_GROUP,)

        def run(self, spec, flags):
            """
            Genus-zero degree-zero count for the classes given by --class.
            """
            if len(flags.classes) < 2:
                raise SemanticError(f"kpoint needs at least 2 --class flags, got {len(flags.classes)}")
            G = self.group(spec, flags)
            sector_type = SectorTuple(tuple(flags.classes))
            data = self.header(spec, self.name)
            data.update({
                'classes': list(sector_type.class_indices),
                'count': render_rational(ModuliCalculator.kpoint_constant_count(G, sector_type)),
                'nonempty': ModuliCalculator.component_nonempty_ptG(G, sector_type),
                'multiplicities': GoodMapCalculator.multiplicities(
                    G, [G.conjugacy_classes[c].representative_index for c in sector_type.class_indices]),
                'target': '[pt/G]',
            })
            return ReportResponse.success(data)

    class _VDIM(Command):
        needs_input = False

        def run(self, spec, flags):
            """
            Virtual dimension 2d of the moduli of orbifold stable maps.
            """
            if flags.dim is None:
                raise SemanticError("vdim needs --dim")
            iotas = tuple(flags.iota)
            marks = flags.marks if flags.marks is not None else len(iotas)
            if not iotas:
                iotas = (Fraction(0),) * marks
            inp = DimensionInput(
                c1a=flags.c1a if flags.c1a is not None else Fraction(0),
                complex_dim=flags.dim,
                genus=flags.genus,
                marks=marks,
                iotas=iotas,
            )
            vdim = ModuliCalculator.virtual_dimension(inp)
            return ReportResponse.success({
                'virtual_dimension': render_rational(vdim),
                'd': render_rational(vdim / 2),
                'iota': render_rational(inp.total_iota),
                'stable': ModuliCalculator.stability_check(inp.genus, inp.marks),
            })

    registry.add_resource(_KPOINT, 'kpoint')
    registry.add_resource(_VDIM, 'vdim')
