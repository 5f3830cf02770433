from maglap.metrics._asymptotics import RemainderReport
from maglap.metrics._asymptotics import limit_value
from maglap.metrics._asymptotics import predicted_remainder
from maglap.metrics._asymptotics import remainder_report
from maglap.metrics._asymptotics import remainder_table
from maglap.metrics._asymptotics import epsilon_m
from maglap.metrics._polya import PolyaScan
from maglap.metrics._polya import RieszRatioScan
from maglap.metrics._polya import LambdaGridSpec
from maglap.metrics._polya import excess_constant
from maglap.metrics._polya import classical_constant
from maglap.metrics._polya import polya_ratio
from maglap.metrics._polya import min_polya_ratio
from maglap.metrics._polya import search_window
from maglap.metrics._polya import critical_field
from maglap.metrics._polya import riesz_ratio
from maglap.metrics._polya import riesz_ratio_scan
from maglap.metrics._polya import sum_bound_ratio
from maglap.metrics._polya import weyl_count


__all__ = [
    'RemainderReport',
    'limit_value',
    'predicted_remainder',
    'remainder_report',
    'remainder_table',
    'epsilon_m',
    'PolyaScan',
    'RieszRatioScan',
    'LambdaGridSpec',
    'excess_constant',
    'classical_constant',
    'polya_ratio',
    'min_polya_ratio',
    'search_window',
    'critical_field',
    'riesz_ratio',
    'riesz_ratio_scan',
    'sum_bound_ratio',
    'weyl_count'
]
