#include "jdcloud/diagnostics.hpp"
#include "jdcloud/error.hpp"

#include <fmt/format.h>

#include <iterator>

namespace jdcloud {

LineError::LineError(std::string file, std::size_t line, const std::string& what)
    : ConfigError(fmt::format("{}:{}: {}", file, line, what))
    , file_(std::move(file))
    , line_(line)
{
}

void Diagnostics::warn(std::string message)
{
    warnings_.push_back(std::move(message));
}

void Diagnostics::merge(Diagnostics&& other)
{
    warnings_.insert(warnings_.end(),
                     std::make_move_iterator(other.warnings_.begin()),
                     std::make_move_iterator(other.warnings_.end()));
    other.warnings_.clear();
}

} // namespace jdcloud
