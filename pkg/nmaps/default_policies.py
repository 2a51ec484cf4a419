"""Dictionaries of named threshold policies.

A policy pairs the threshold constant ``k`` with a thresholding mode. The
``'default'`` entry is used whenever neither the map file nor the command
line says otherwise. Entries can be added or removed to suit the user's needs.
"""
from __future__ import division, print_function, absolute_import

from nmaps.neutro import ThresholdMode, ThresholdPolicy

threshold_policies = {
    'default': ThresholdPolicy(k=1, mode=ThresholdMode.REAL_DOMINANT),
    'real': ThresholdPolicy(k=1, mode=ThresholdMode.REAL_DOMINANT),
    'indet': ThresholdPolicy(k=1, mode=ThresholdMode.INDET_DOMINANT),
}

# Tokens accepted by `--mode` and by the `mode =` field of a map file.
mode_names = {
    'real': ThresholdMode.REAL_DOMINANT,
    'indet': ThresholdMode.INDET_DOMINANT,
}
