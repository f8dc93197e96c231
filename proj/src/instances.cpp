#include "tensordeg/instances.hpp"

#include <string>

namespace tensordeg {

namespace {

Index common_square_size(const std::vector<MatrixQ>& ms, const char* what) {
  if (ms.empty()) throw InvalidInput(std::string(what) + ": at least one matrix required");
  const Index n = ms.front().rows();
  if (n < 1) throw InvalidInput(std::string(what) + ": dimension must be positive");
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (ms[i].rows() != n || ms[i].cols() != n) {
      throw InvalidInput(std::string(what) + ": matrix " + std::to_string(i) + " is not " +
                         std::to_string(n) + "x" + std::to_string(n));
    }
  }
  return n;
}

}  // namespace

QuadraticInstance::QuadraticInstance(std::vector<MatrixQ> forms) : forms_(std::move(forms)) {
  n_ = common_square_size(forms_, "quadratic instance");
  for (std::size_t t = 0; t < forms_.size(); ++t) {
    if (!is_symmetric(forms_[t])) {
      throw InvalidInput("quadratic instance: form " + std::to_string(t) + " is not symmetric");
    }
  }
}

BilinearInstance::BilinearInstance(std::vector<MatrixQ> matrices)
    : matrices_(std::move(matrices)) {
  n_ = common_square_size(matrices_, "bilinear instance");
}

PencilInstance::PencilInstance(std::vector<MatrixQ> matrices) : matrices_(std::move(matrices)) {
  n_ = common_square_size(matrices_, "pencil instance");
}

}  // namespace tensordeg
