#!/usr/bin/env python3

# infoaging - information aging of noisy Gaussian AR(p) sources
#
# Copyright (c) 2026 infoaging developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.

"""
infoaging

Closed-form remote-estimation error (L-conditional entropy) of a noisy
Gaussian AR(p) source as a function of Age of Information and feature
length, the epsilon-Markov divergence that decides whether that error is
monotone in AoI, and a seeded Monte Carlo oracle for all of it.
"""

__version__ = "0.1.0"


from .ar_model import ArModel
from .ar_model import AutocovTable
from .ar_model import ValidationReport
from .ar_model import REFERENCE_AR4

from .ar_model import validate_model
from .ar_model import autocovariance
from .ar_model import target_second_moment
from .ar_model import required_max_lag
from .ar_model import load_model_file
from .ar_model import check_yule_walker

from .matrix_kernel import SymMatrix
from .matrix_kernel import logdet_spd
from .matrix_kernel import solve_spd

from .gaussian_information import JointIndexSet
from .gaussian_information import EntropyCurve
from .gaussian_information import corr_matrix
from .gaussian_information import h2_conditional
from .gaussian_information import h2_l1
from .gaussian_information import hlog_marginal
from .gaussian_information import hlog_conditional
from .gaussian_information import hlog_l1
from .gaussian_information import conditional_entropy
from .gaussian_information import mutual_information
from .gaussian_information import cmi
from .gaussian_information import entropy_curve
from .gaussian_information import g1_curve

from .epsilon_markov import EpsilonQuery
from .epsilon_markov import EpsilonReport
from .epsilon_markov import epsilon_mu_nu
from .epsilon_markov import epsilon_l
from .epsilon_markov import prop3b_check

from .monte_carlo_oracle import Trajectory
from .monte_carlo_oracle import simulate
from .monte_carlo_oracle import empirical_acf
from .monte_carlo_oracle import empirical_mmse
from .monte_carlo_oracle import empirical_hlog
from .monte_carlo_oracle import compare_with_closed_form

from .errors import CheckCode

from .errors import InfoAgingError
from .errors import InvalidModelError
from .errors import NonStationaryModelError
from .errors import DegenerateModelError
from .errors import NotPositiveDefiniteError
from .errors import DimensionMismatchError
from .errors import IndexRangeError
from .errors import NumericalConsistencyError
from .errors import OracleDataError
from .errors import ConfigError
