from maglap.models.disk import KummerDiskSolver
from maglap.models.disk import branch_eigenvalue
from maglap.models.disk import enumerate_spectrum
from maglap.models.disk import nth_eigenvalue
from maglap.models.disk import counting_function
from maglap.models.disk import riesz_mean
from maglap.models.disk import crossing_field
from maglap.models.disk import lowest_band_count
from maglap.models.disk import scale_spectrum

from maglap.models.oracle import OracleConfig
from maglap.models.oracle import FiniteDifferenceSolver
from maglap.models.oracle import radial_eigenvalues_fd
from maglap.models.oracle import sturm_count


__all__ = [
    'KummerDiskSolver', 'FiniteDifferenceSolver',
    'branch_eigenvalue', 'enumerate_spectrum', 'nth_eigenvalue', 'counting_function',
    'riesz_mean', 'crossing_field', 'lowest_band_count', 'scale_spectrum',
    'OracleConfig', 'radial_eigenvalues_fd', 'sturm_count'
]
