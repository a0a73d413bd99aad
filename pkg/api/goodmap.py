# goodmap.py
"""
Good-map commands: goodmap (splitting obstruction of a sector inclusion)
and lifts (equivariant lifts of a cyclic local group).
"""

from api.commands import Command, registry
from api.validators import KIND_MATRIX_GROUP
from model.sector import GEOMETRY_LINEAR
from model.utils.errors import NoLifts, SemanticError, UnsupportedGeometry
from model.utils.response import ReportResponse
from services.goodmap_calculator import EQUIVALENCE, GoodMapCalculator


def _linear_group(command, spec, flags):
    if spec.geometry != GEOMETRY_LINEAR:
        raise UnsupportedGeometry(f"{command.name} needs a linear quotient, got '{spec.geometry}'")
    return command.group(spec, flags)


class GoodMapAPI:

    class _GOODMAP(Command):
        kinds = (KIND_MATRIX_GROUP,)

        def run(self, spec, flags):
            """
            Decide whether H^g/C(g) -> C^n/G is good for g given by --element.
            """
            if flags.element is None:
                raise SemanticError("goodmap needs --element")
            G = _linear_group(self, spec, flags)
            g = G.element_from_word(flags.element)
            verdict = GoodMapCalculator.fixed_locus_goodness(G, g)
            data = self.header(spec, self.name)
            data.update(verdict.to_json())
            data['crossValidation'] = GoodMapCalculator.cross_validate_goodness(G, g).to_json()
            return ReportResponse.success(data)

    class _LIFTS(Command):
        kinds = (KIND_MATRIX_GROUP,)

        def run(self, spec, flags):
            """
            Lifts Z_m -> G acting on the --axis subspace by zeta_m^k (--order m, --action k).
            """
            if not flags.axis or flags.order is None or flags.action is None:
                raise SemanticError("lifts needs --axis, --order and --action")
            G = _linear_group(self, spec, flags)
            data = self.header(spec, self.name)
            try:
                lifts = GoodMapCalculator.enumerate_equivariant_lifts(G, flags.axis, flags.order, flags.action)
            except NoLifts as err:
                data.update({
                    'verdict': 'not_good',
                    'message': err.message,
                    'lifts': [],
                    'equivalenceClasses': [],
                    'classes': 0,
                    'equivalence': EQUIVALENCE,
                })
                return ReportResponse.success(data)
            data.update(lifts.to_json())
            data['verdict'] = 'good'
            return ReportResponse.success(data)

    registry.add_resource(_GOODMAP, 'goodmap')
    registry.add_resource(_LIFTS, 'lifts')
