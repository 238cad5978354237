#pragma once

#include <stdexcept>
#include <string>

namespace regimecast {

// A model file that fails schema or stochasticity checks on load.
class CorruptModelError : public std::runtime_error {
public:
    explicit CorruptModelError(const std::string& what) : std::runtime_error(what) {}
};

// Evidence with zero marginal probability under the network.
class InconsistentEvidenceError : public std::runtime_error {
public:
    explicit InconsistentEvidenceError(const std::string& what) : std::runtime_error(what) {}
};

// Series whose date ranges have an empty common intersection.
class NoOverlapError : public std::runtime_error {
public:
    explicit NoOverlapError(const std::string& what) : std::runtime_error(what) {}
};

// A panel column for which no trained HMM is available.
class MissingModelError : public std::runtime_error {
public:
    explicit MissingModelError(const std::string& what) : std::runtime_error(what) {}
};

// Transport or upstream failure while retrieving a series.
class FetchError : public std::runtime_error {
public:
    FetchError(const std::string& what, int status = 0)
        : std::runtime_error(what), status_(status) {}
    int status() const { return status_; }

private:
    int status_;
};

// Malformed or unusable input data (bad record, empty panel, ...).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace regimecast
