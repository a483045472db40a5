from .calendar_date import CalendarDate, MAX_YEAR, MIN_YEAR
from .doubling_model import DoublingModel
from .growth import (
    calibrate_doubling,
    ln_project_hours,
    log2_scale_factor,
    months_between,
    project_hours,
    scale_factor,
)
from .presets import CALIBRATED_RSA512, DEFAULT_MODEL, MOORE_18_MONTHS, MOORE_1975, PRESETS, preset
from .schedules import DoublingRow, ScheduleRow, table4_rows, table7_schedule


__all__ = [
    'CALIBRATED_RSA512', 'CalendarDate', 'DEFAULT_MODEL', 'DoublingModel', 'DoublingRow',
    'MAX_YEAR', 'MIN_YEAR', 'MOORE_18_MONTHS', 'MOORE_1975', 'PRESETS', 'ScheduleRow',
    'calibrate_doubling', 'ln_project_hours', 'log2_scale_factor', 'months_between',
    'preset', 'project_hours', 'scale_factor', 'table4_rows', 'table7_schedule',
]
