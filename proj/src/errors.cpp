#include "kodim/errors.hpp"

namespace kodim {

std::string NotFoundError::format(const std::string& name,
                                  const std::vector<std::string>& suggestions) {
    std::string msg = "unknown geometry '" + name + "'";
    if (!suggestions.empty()) {
        msg += "; did you mean: ";
        for (std::size_t i = 0; i < suggestions.size(); ++i) {
            if (i) msg += ", ";
            msg += suggestions[i];
        }
    }
    return msg;
}

NotFoundError::NotFoundError(std::string name, std::vector<std::string> suggestions)
    : Error(format(name, suggestions)),
      name_(std::move(name)),
      suggestions_(std::move(suggestions)) {}

}  // namespace kodim
