"""
Core module for braid words, Dehornoy's order, grid diagrams and theta-hat
"""

from core.models import (
    BraidWord, Permutation, QuasipositiveForm, OrderSign, FdtcBounds, MurasugiForm,
    MurasugiVariant, RvStatus, Certificate, RvVerdict, GridDiagram, GridState, ChainF2,
    Bigrading, ThetaStatus, NonzeroReason, NonvanishingResult,
)
from core.validation import BraidFloerError, ValidationError, LimitExceeded
from core.file_io import GridIO

__all__ = [
    'BraidWord', 'Permutation', 'QuasipositiveForm', 'OrderSign', 'FdtcBounds',
    'MurasugiForm', 'MurasugiVariant', 'RvStatus', 'Certificate', 'RvVerdict',
    'GridDiagram', 'GridState', 'ChainF2', 'Bigrading', 'ThetaStatus', 'NonzeroReason',
    'NonvanishingResult', 'BraidFloerError', 'ValidationError', 'LimitExceeded', 'GridIO',
]
