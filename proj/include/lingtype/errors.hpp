// Copyright 2026 The lingtype Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LINGTYPE_ERRORS_HPP_
#define LINGTYPE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace lingtype {

/// Base class for every typed error thrown by the harness.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Configuration and data ingestion.
class ConfigError : public Error { public: using Error::Error; };
class UnknownLanguage : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };
class SchemaError : public Error { public: using Error::Error; };
class InsufficientDistractors : public Error { public: using Error::Error; };
class EmptyPool : public Error { public: using Error::Error; };
class EmptyCount : public Error { public: using Error::Error; };

// Backend transport.
class TransportError : public Error { public: using Error::Error; };
class RateLimited : public Error { public: using Error::Error; };
class BackendRefusal : public Error { public: using Error::Error; };
class PromptTooLong : public Error { public: using Error::Error; };

// Translation and embedding.
class TranslatorError : public Error { public: using Error::Error; };
class EmbedderError : public Error { public: using Error::Error; };
class ZeroVector : public Error { public: using Error::Error; };

// Metrics and protocol.
class EmptyVector : public Error { public: using Error::Error; };
class LengthMismatch : public Error { public: using Error::Error; };
class OutOfRange : public Error { public: using Error::Error; };
class NoScorableInstances : public Error { public: using Error::Error; };

// Simulation lab and reporting.
class UnknownInstance : public Error { public: using Error::Error; };
class IncompleteArtifact : public Error { public: using Error::Error; };

}  // namespace lingtype

#endif  // LINGTYPE_ERRORS_HPP_
