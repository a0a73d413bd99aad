# ring.py
"""
Ring commands: ring (full table or one product), pairing, threepoint.

pairing and threepoint always count on the point quotient [pt/G] of the
input group; ring follows the input geometry.
"""

from api.commands import Command, registry
from api.validators import KIND_MATRIX_GROUP
from model.graded import OrbClass
from model.sector import GEOMETRY_POINT
from model.utils.errors import NonAbelian, SemanticError, UnsupportedGeometry
from model.utils.response import ReportResponse, render_rational
from services.ring_calculator import RingCalculator


def _expect(values, count, flag):
    if len(values) != count:
        raise SemanticError(f"Expected {count} --{flag} flags, got {len(values)}")
    return values


class RingAPI:

    class _RING(Command):
        kinds = (KIND_MATRIX_GROUP,)

        def run(self, spec, flags):
            """
            Orbifold cup product: the whole table, or one product with two --sector flags.
            """
            dec = self.decomposition(spec, flags)
            try:
                if dec.geometry_kind == GEOMETRY_POINT:
                    table = RingCalculator.ring_table_ptG(dec.group, dec)
                else:
                    table = RingCalculator.ring_table_abelian_linear(dec)
            except NonAbelian as err:
                raise UnsupportedGeometry(f"ring: {err.message}", details={'geometry': dec.geometry_kind})
            data = self.header(spec, self.name)
            if flags.sector:
                a, b = _expect(flags.sector, 2, 'sector')
                for s in (a, b):
                    if not 0 <= s < table.rank:
                        raise SemanticError(f"Sector index {s} out of range (there are {table.rank} sectors)")
                data.update({
                    'sectors': [a, b],
                    'product': table.multiply(OrbClass.basis(a), OrbClass.basis(b)).to_json(),
                    'normalization': table.normalization,
                })
            else:
                data.update(table.to_json())
                if table.gram is not None:
                    data['gramDeterminant'] = render_rational(RingCalculator.gram_determinant(table))
            return ReportResponse.success(data)

    class _PAIRING(Command):
        kinds = (KIND_MATRIX_GROUP,)

        def run(self, spec, flags):
            """
            <e_C1, e_C2> on [pt/G].
            """
            c1, c2 = _expect(flags.classes, 2, 'class')
            G = self.group(spec, flags)
            data = self.header(spec, self.name)
            data.update({
                'classes': [c1, c2],
                'pairing': render_rational(RingCalculator.pairing_ptG(G, c1, c2)),
                'target': '[pt/G]',
            })
            return ReportResponse.success(data)

    class _THREEPOINT(Command):
        kinds = (KIND_MATRIX_GROUP,)

        def run(self, spec, flags):
            """
            Degree-zero three-point count on [pt/G].
            """
            c1, c2, c3 = _expect(flags.classes, 3, 'class')
            G = self.group(spec, flags)
            data = self.header(spec, self.name)
            data.update({
                'classes': [c1, c2, c3],
                'threepoint': render_rational(RingCalculator.threepoint_ptG(G, c1, c2, c3)),
                'target': '[pt/G]',
            })
            return ReportResponse.success(data)

    registry.add_resource(_RING, 'ring')
    registry.add_resource(_PAIRING, 'pairing')
    registry.add_resource(_THREEPOINT, 'threepoint')
