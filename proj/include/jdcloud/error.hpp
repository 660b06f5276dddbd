#pragma once

#include <stdexcept>
#include <string>

namespace jdcloud {

/// Base class for every error the library reports by exception.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input roots are missing or unusable.
class CorpusError : public Error {
public:
    using Error::Error;
};

/// The roots exist but no file matched.
class EmptyCorpusError : public CorpusError {
public:
    using CorpusError::CorpusError;
};

/// A lexicon, stop list or style setting could not be used.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A malformed line in a line-oriented data file.
class LineError : public ConfigError {
public:
    LineError(std::string file, std::size_t line, const std::string& what);

    const std::string& file() const noexcept { return file_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string file_;
    std::size_t line_;
};

/// A caller broke a documented precondition.
class ContractError : public Error {
public:
    using Error::Error;
};

} // namespace jdcloud
