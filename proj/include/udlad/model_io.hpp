#ifndef UDLAD_MODEL_IO_HPP
#define UDLAD_MODEL_IO_HPP

#include <udlad/dict_learning.hpp>

#include <string>

namespace udlad {

// Binary model file, magic "UDLAD1": header (m, n, |I|, regularizer kind,
// lambda, epsilon, sparsity, sweeps, seed), then column-major atom values,
// then the sorted support indices. Integers are 64-bit little-endian, reals
// 64-bit IEEE. Save/load round trips are byte-identical; the objective trace
// is not persisted.
void save_model(const Model& model, const std::string& path);
Model load_model(const std::string& path);

}  // namespace udlad

#endif
