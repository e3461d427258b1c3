"""Transmission eigenvalues of a penetrable disk by inside-outside duality

tedual computes the phases of the modified scattering operator of a
penetrable disk in an artificial background n_b = rho/k^2, tracks their
extremal value over a wavenumber window and detects transmission eigenvalues
as phase resets. The eigenvalues are cross-validated against the roots of the
mode-wise transmission determinant, and the associated background field is
recovered as a radial profile.
"""

pkgname = 'tedual'

__copyright__ = 'Copyright 2026 the tedual authors'
__author__ = 'The tedual authors <tedual@users.noreply.github.com>'
__license__ = 'BSD'
__url__ = 'https://github.com/tedual/tedual/'
__version__ = '1.0'
