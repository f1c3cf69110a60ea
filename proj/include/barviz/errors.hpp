#pragma once

#include <stdexcept>
#include <string>

namespace barviz {

// Every failure mode surfaced by the library. CLI maps these to exit code 2,
// except recognition verdicts which are ordinary return values.
enum class Errc {
    EmptyGraph,
    BadSize,
    InvalidLayout,
    NotRepresentable,
    SizeLimit,
    InvalidInput,
    NotTriangleFree,
    NotSpanning,
    WrongRealization,
    DepthExceeded,
    NotOneWayBipartite,
    SameSide,
    NotCubicTriangleFree,
    BadOrientation,
    NotHamiltonianOfSource,
    AssemblyOverflow,
    BadT,
    ParseError,
    Internal,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::EmptyGraph: return "EmptyGraph";
        case Errc::BadSize: return "BadSize";
        case Errc::InvalidLayout: return "InvalidLayout";
        case Errc::NotRepresentable: return "NotRepresentable";
        case Errc::SizeLimit: return "SizeLimit";
        case Errc::InvalidInput: return "InvalidInput";
        case Errc::NotTriangleFree: return "NotTriangleFree";
        case Errc::NotSpanning: return "NotSpanning";
        case Errc::WrongRealization: return "WrongRealization";
        case Errc::DepthExceeded: return "DepthExceeded";
        case Errc::NotOneWayBipartite: return "NotOneWayBipartite";
        case Errc::SameSide: return "SameSide";
        case Errc::NotCubicTriangleFree: return "NotCubicTriangleFree";
        case Errc::BadOrientation: return "BadOrientation";
        case Errc::NotHamiltonianOfSource: return "NotHamiltonianOfSource";
        case Errc::AssemblyOverflow: return "AssemblyOverflow";
        case Errc::BadT: return "BadT";
        case Errc::ParseError: return "ParseError";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Errc code;
    Error(Errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace barviz
