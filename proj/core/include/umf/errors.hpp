#pragma once

#include <stdexcept>
#include <string>

namespace umf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Profile / file loading
class ParseError : public Error { public: using Error::Error; };
class SchemaError : public Error { public: using Error::Error; };

// Divergence engine
class RangeError : public Error { public: using Error::Error; };
class UnknownLabel : public Error { public: using Error::Error; };
class KindMismatch : public Error { public: using Error::Error; };
class ComponentMismatch : public Error { public: using Error::Error; };

// Directive engine
class NonPositiveWeight : public Error { public: using Error::Error; };
class ZeroVector : public Error { public: using Error::Error; };

// Scorers
class EmptyText : public Error { public: using Error::Error; };
class MissingMarkers : public Error { public: using Error::Error; };
class UnsupportedDimension : public Error { public: using Error::Error; };
class NoActiveDimensions : public Error { public: using Error::Error; };

// Reranker
class EmptySet : public Error { public: using Error::Error; };

// Metrics
class EmptyInput : public Error { public: using Error::Error; };
class NoInterventions : public Error { public: using Error::Error; };
class LengthMismatch : public Error { public: using Error::Error; };
class DegenerateMarginals : public Error { public: using Error::Error; };
class IdMismatch : public Error { public: using Error::Error; };

// Generator wire contract
class TransportError : public Error { public: using Error::Error; };
class ProtocolError : public Error { public: using Error::Error; };
class EmptyResponse : public Error { public: using Error::Error; };

}  // namespace umf
