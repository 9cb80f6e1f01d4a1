#include <pybind11/pybind11.h>

PYBIND11_MODULE(_curvecount, m) { m.doc() = "curvecount python bindings"; }
