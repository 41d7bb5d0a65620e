"""Pure-Python twin of the compiled RK4 kernel.

Kept in lockstep with ``_shoot.pyx``: same stepping order, same rescale
threshold, so the two backends agree to rounding.  Arrays are converted to
plain lists up front; attribute lookups inside the loop are the dominant
cost otherwise.
"""
import math


def rk4_linear2x2(step, a11, a12, a21, a22,
                  y1_init, y2_init, reverse,
                  y1_out, y2_out, logscale_out):
    n = len(step) + 1
    s = list(step)
    b11 = list(a11)
    b12 = list(a12)
    b21 = list(a21)
    b22 = list(a22)

    y1 = y1_init
    y2 = y2_init
    acc = 0.0
    if reverse:
        y1_out[n - 1] = y1
        y2_out[n - 1] = y2
        logscale_out[n - 1] = acc
    else:
        y1_out[0] = y1
        y2_out[0] = y2
        logscale_out[0] = acc

    for i in range(n - 1):
        if reverse:
            iw = n - 2 - i
            h = -s[iw]
            i0 = 2 * (iw + 1)
            im = 2 * iw + 1
            i1 = 2 * iw
        else:
            iw = i + 1
            h = s[i]
            i0 = 2 * i
            im = 2 * i + 1
            i1 = 2 * i + 2

        k11 = b11[i0] * y1 + b12[i0] * y2
        k12 = b21[i0] * y1 + b22[i0] * y2
        t1 = y1 + 0.5 * h * k11
        t2 = y2 + 0.5 * h * k12
        k21 = b11[im] * t1 + b12[im] * t2
        k22 = b21[im] * t1 + b22[im] * t2
        t1 = y1 + 0.5 * h * k21
        t2 = y2 + 0.5 * h * k22
        k31 = b11[im] * t1 + b12[im] * t2
        k32 = b21[im] * t1 + b22[im] * t2
        t1 = y1 + h * k31
        t2 = y2 + h * k32
        k41 = b11[i1] * t1 + b12[i1] * t2
        k42 = b21[i1] * t1 + b22[i1] * t2
        y1 = y1 + h * (k11 + 2.0 * k21 + 2.0 * k31 + k41) / 6.0
        y2 = y2 + h * (k12 + 2.0 * k22 + 2.0 * k32 + k42) / 6.0

        mag = max(abs(y1), abs(y2))
        if mag > 1e250:
            y1 /= mag
            y2 /= mag
            acc += math.log(mag)
        if not (math.isfinite(y1) and math.isfinite(y2)):
            return 1

        y1_out[iw] = y1
        y2_out[iw] = y2
        logscale_out[iw] = acc

    return 0
