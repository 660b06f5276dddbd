#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace jdcloud {

/** Collects non-fatal warnings raised while processing a corpus.

    Warnings are kept in emission order. Callers that process files in
    parallel give each worker its own instance and merge them afterwards
    in document order, so the final list never depends on scheduling.
*/
class Diagnostics {
public:
    void warn(std::string message);
    void merge(Diagnostics&& other);

    const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    std::size_t count() const noexcept { return warnings_.size(); }
    bool empty() const noexcept { return warnings_.empty(); }

private:
    std::vector<std::string> warnings_;
};

} // namespace jdcloud
