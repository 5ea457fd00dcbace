""" The recursive function f_{k,l}, its reduced form g_k and the density of {k u v}. """
from .construction import FConstruction, bar_values, f_kl, lemma_point, verify_lemma1
from .density import HistogramCheck, density_integral, kxy_cdf, kxy_density, kxy_histogram_check
from .frac_vector import BarValues, FracVector
from .witness import STATISTICS, WitnessEstimate, fourier_witness, g_k, g_pairs
