import logging
from typing import Optional, Tuple

from src.estimator.baseline_record import BaselineRecord
from src.estimator.security_query import ProtectionMode, SecurityQuery
from src.moore.calendar_date import CalendarDate
from src.moore.doubling_model import DoublingModel
from src.moore.presets import preset
from src.settings import Settings, settings as default_settings


class EstimatorBuilder:
    """Assembles the baseline, doubling law and query defaults for a run.

    Every argument left as None falls back to the settings object, so
    command-line flags override the config file, which overrides defaults.
    """

    def __init__(self,
                 baseline_bits=None, baseline_hours=None, baseline_date=None,
                 doubling_months=None, doubling_preset=None,
                 margin=None, mode=None, round_to_standard=None,
                 settings: Optional[Settings] = None):
        self.logger = logging.getLogger(__name__)
        self.settings = settings if settings is not None else default_settings
        s = self.settings
        # Use provided params or fallback to settings
        self.baseline_bits = baseline_bits if baseline_bits is not None else s.baseline_bits
        self.baseline_hours = baseline_hours if baseline_hours is not None else s.baseline_hours
        self.baseline_date = (baseline_date if baseline_date is not None
                              else CalendarDate(s.baseline_year, s.baseline_month))
        self.doubling_months = doubling_months if doubling_months is not None else s.doubling_months
        self.doubling_preset = doubling_preset
        self.margin = margin if margin is not None else s.margin
        self.mode = ProtectionMode.parse(mode if mode is not None else s.mode)
        self.round_to_standard = round_to_standard if round_to_standard is not None else s.round_to_standard

        self.baseline = None
        self.model = None

    def initialize(self) -> None:
        """Builds the baseline record and doubling model, unless already set."""
        if self.baseline is None:
            self.baseline = BaselineRecord(self.baseline_bits, float(self.baseline_hours), self.baseline_date)
        if self.model is None:
            if self.doubling_preset is not None:
                self.model = preset(self.doubling_preset)
                self.logger.info(f"Using doubling preset {self.model.label} ({self.model.period_months:.4f} months)")
            else:
                self.model = DoublingModel(float(self.doubling_months))

    def build(self) -> Tuple[BaselineRecord, DoublingModel]:
        """Returns the validated baseline and doubling model."""
        self.initialize()
        self.logger.debug(f"Baseline {self.baseline}, model {self.model}")
        return self.baseline, self.model

    def query(self, protect_from: CalendarDate, lifespan_years: float) -> SecurityQuery:
        return SecurityQuery(protect_from, lifespan_years, self.margin, self.mode)
