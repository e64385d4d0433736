// Error taxonomy for the tori library.
//
// Every failure the library can signal derives from tori::Error and carries a
// stable name, so callers (notably the CLI) can report `error: <Name>: detail`
// without string-matching messages.  Two branches fix the process exit code:
//
//   InputError  — malformed or out-of-contract *input*: bad file syntax,
//                 non-unimodular matrices, unknown word tokens, inconsistent
//                 singularity counts, mismatched component counts.  Exit 2.
//   DomainError — structurally valid input whose *geometry or algebra* is
//                 outside the domain of the requested computation: pinched
//                 solids, non-torus boundaries, off-surface cycles, dependent
//                 markings, ambiguous kernels, classes that are not regularly
//                 homotopic, curves touching a core.  Exit 1.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tori {

class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

  // Stable identifier, independent of the human-readable message.
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& message)
      : Error("InputError", message) {}

 protected:
  InputError(std::string name, const std::string& message)
      : Error(std::move(name), message) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message)
      : Error("DomainError", message) {}

 protected:
  DomainError(std::string name, const std::string& message)
      : Error(std::move(name), message) {}
};

// ---------------------------------------------------------------------------
// InputError family (exit 2)

// Shapes of vectors/matrices disagree (length vs rows, cols vs cols, ...).
class DimensionError : public InputError {
 public:
  explicit DimensionError(const std::string& message)
      : InputError("DimensionError", message) {}
};

// 2x2 integer matrix whose determinant is not +1 or -1.
class NotUnimodular : public InputError {
 public:
  explicit NotUnimodular(const std::string& message)
      : InputError("NotUnimodular", message) {}
};

// A generator-word token outside the known alphabet.
class UnknownGenerator : public InputError {
 public:
  explicit UnknownGenerator(const std::string& message)
      : InputError("UnknownGenerator", message) {}
};

// Singularity counts violating min - saddle + max = chi - 1, or negative.
class InconsistentMorseData : public InputError {
 public:
  explicit InconsistentMorseData(const std::string& message)
      : InputError("InconsistentMorseData", message) {}
};

// Two systems compared component-wise but of different lengths.
class ComponentCountMismatch : public InputError {
 public:
  explicit ComponentCountMismatch(const std::string& message)
      : InputError("ComponentCountMismatch", message) {}
};

// Matrix entry beyond the exact-arithmetic working range.
class MatrixEntryTooLarge : public InputError {
 public:
  explicit MatrixEntryTooLarge(const std::string& message)
      : InputError("MatrixEntryTooLarge", message) {}
};

// Generator word that would need more unit tokens than the emitter allows.
class DecompositionTooLong : public InputError {
 public:
  explicit DecompositionTooLong(const std::string& message)
      : InputError("DecompositionTooLong", message) {}
};

// ---------------------------------------------------------------------------
// DomainError family (exit 1)

// Voxel set whose boundary is not a closed 2-manifold (edge- or
// corner-diagonal contact between solid and solid, or solid and complement).
class PinchedSolid : public DomainError {
 public:
  explicit PinchedSolid(const std::string& message)
      : DomainError("PinchedSolid", message) {}
};

// Boundary surface is a closed 2-manifold but not a single torus.
class NotATorus : public DomainError {
 public:
  explicit NotATorus(const std::string& message)
      : DomainError("NotATorus", message) {}
};

// A cycle uses an edge that is not an edge of the intended surface.
class CycleNotOnSurface : public DomainError {
 public:
  explicit CycleNotOnSurface(const std::string& message)
      : DomainError("CycleNotOnSurface", message) {}
};

// Marking cycles whose classes do not span H1 of the surface.
class DependentMarking : public DomainError {
 public:
  explicit DependentMarking(const std::string& message)
      : DomainError("DependentMarking", message) {}
};

// Kernel extraction did not isolate exactly one bounding class — the
// signal that the enclosing box is too tight (box_margin too small) or the
// marking does not behave like a torus marking.
class KernelDimensionError : public DomainError {
 public:
  explicit KernelDimensionError(const std::string& message)
      : DomainError("KernelDimensionError", message) {}
};

// Two mapping classes whose quotient is not in the parity-defined subgroup.
class NotRegularlyHomotopic : public DomainError {
 public:
  explicit NotRegularlyHomotopic(const std::string& message)
      : DomainError("NotRegularlyHomotopic", message) {}
};

// Matrix outside the even-congruence class of the identity (decomposition
// over the even shear/sign generators is impossible).
class NotInTauU : public DomainError {
 public:
  explicit NotInTauU(const std::string& message)
      : DomainError("NotInTauU", message) {}
};

// A probe cycle runs along an edge of the core path, so the crossing
// count against that core is not defined.
class SharedPoint : public DomainError {
 public:
  explicit SharedPoint(const std::string& message)
      : DomainError("SharedPoint", message) {}
};

// System components that overlap or touch (faces, edges, or corners).
class ComponentsNotSeparated : public DomainError {
 public:
  explicit ComponentsNotSeparated(const std::string& message)
      : DomainError("ComponentsNotSeparated", message) {}
};

// Invariant believed unreachable was violated; always a library bug.
class InternalError : public DomainError {
 public:
  explicit InternalError(const std::string& message)
      : DomainError("InternalError", message) {}
};

}  // namespace tori
