from .version import __version__
from frobenius_singularities import core_algebra
from frobenius_singularities import groebner
from frobenius_singularities import ideals
from frobenius_singularities import frobenius
from frobenius_singularities import divisor
from frobenius_singularities import demazure
from frobenius_singularities import covers
from frobenius_singularities import cli
