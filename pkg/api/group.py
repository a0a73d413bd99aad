# group.py
"""
Sector and cohomology commands: sectors, poincare, euler, mckay.
"""

from api.commands import Command, registry
from api.validators import KIND_MATRIX_GROUP, KIND_WEIGHTED_PROJECTIVE
from model.sector import GEOMETRY_POINT
from model.utils.response import ReportResponse
from services.cohomology_calculator import CohomologyCalculator


class GroupAPI:

    class _SECTORS(Command):
        def run(self, spec, flags):
            """
            List the twisted sectors with their degree shifting numbers.
            """
            data = self.header(spec, self.name)
            if spec.kind == KIND_WEIGHTED_PROJECTIVE:
                X = spec.space
                data.update({
                    'geometry': 'wps',
                    'weights': list(X.weights),
                    'dimension': X.complex_dimension,
                    'sectors': [s.to_json() for s in CohomologyCalculator.wps_sectors(X)],
                    'involution': CohomologyCalculator.wps_sector_involution(X),
                })
            else:
                dec = self.decomposition(spec, flags)
                data.update(dec.to_json())
            return ReportResponse.success(data)

    class _POINCARE(Command):
        def run(self, spec, flags):
            """
            Orbifold Poincare table: degree -> dimension.
            """
            data = self.header(spec, self.name)
            if spec.kind == KIND_WEIGHTED_PROJECTIVE:
                X = spec.space
                table = CohomologyCalculator.orbifold_poincare_wps(X)
                data.update({'label': 'orbifold cohomology', 'geometry': 'wps', 'dimension': X.complex_dimension})
            else:
                dec = self.decomposition(spec, flags)
                table = CohomologyCalculator.orbifold_poincare_linear(dec)
                label = 'orbifold cohomology' if dec.geometry_kind == GEOMETRY_POINT else 'age-graded dimension table'
                data.update({'label': label, 'geometry': dec.geometry_kind, 'dimension': dec.complex_dimension})
            data.update({'degrees': table.to_json(), 'totalDim': table.total_dim})
            return ReportResponse.success(data)

    class _EULER(Command):
        def run(self, spec, flags):
            """
            Orbifold Euler number: the sum of the Euler numbers of all sectors.
            """
            data = self.header(spec, self.name)
            if spec.kind == KIND_WEIGHTED_PROJECTIVE:
                X = spec.space
                data['euler'] = CohomologyCalculator.orbifold_euler(X)
                data['perSector'] = CohomologyCalculator.wps_euler_by_sector(X)
            else:
                data['euler'] = CohomologyCalculator.orbifold_euler(self.decomposition(spec, flags))
            return ReportResponse.success(data)

    class _MCKAY(Command):
        kinds = (KIND_MATRIX_GROUP,)

        def run(self, spec, flags):
            """
            Class count against the age grading of an SL quotient.
            """
            data = self.header(spec, self.name)
            data.update(CohomologyCalculator.mckay_report(self.decomposition(spec, flags)).to_json())
            return ReportResponse.success(data)

    registry.add_resource(_SECTORS, 'sectors')
    registry.add_resource(_POINCARE, 'poincare')
    registry.add_resource(_EULER, 'euler')
    registry.add_resource(_MCKAY, 'mckay')
