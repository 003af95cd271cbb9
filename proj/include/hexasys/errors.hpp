#pragma once

#include <stdexcept>
#include <string>

namespace hexasys {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct PointOutsideHexagon : Error {
    explicit PointOutsideHexagon(const std::string& what = "point outside hexagon")
        : Error(what) {}
};

struct NotALatticeCenter : Error {
    explicit NotALatticeCenter(const std::string& what = "point is not a lattice center")
        : Error(what) {}
};

struct BadRay : Error {
    explicit BadRay(const std::string& what = "ray does not enter the hexagon interior")
        : Error(what) {}
};

struct NotClosed : Error {
    explicit NotClosed(const std::string& what = "trajectory is not closed")
        : Error(what) {}
};

struct EmptyAxisSet : Error {
    explicit EmptyAxisSet(const std::string& what = "axis set is empty")
        : Error(what) {}
};

struct IncompatiblePiPowers : Error {
    explicit IncompatiblePiPowers(const std::string& what = "incompatible pi powers")
        : Error(what) {}
};

struct ResolutionTooCoarse : Error {
    explicit ResolutionTooCoarse(const std::string& what = "grid too coarse for mollifier width")
        : Error(what) {}
};

struct QuadratureNotConverged : Error {
    explicit QuadratureNotConverged(const std::string& what) : Error(what) {}
};

}  // namespace hexasys
