// SPDX-License-Identifier: Apache-2.0
//
// lightpoint - layered ray tracing and aRIS deployment library for underwater acoustic MIMO
// Copyright (C) 2026 The lightpoint authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef LIGHTPOINT_ERRORS_HPP
#define LIGHTPOINT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace lightpoint
{
    // Base class of every error raised by the library. name() returns the
    // short error kind that the CLI prints on failure.
    class Error : public std::runtime_error
    {
    public:
        Error(std::string kind, const std::string &what)
            : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
        const std::string &name() const noexcept { return kind_; }

    private:
        std::string kind_;
    };

#define LIGHTPOINT_DEFINE_ERROR(Type)                                      \
    class Type : public Error                                              \
    {                                                                      \
    public:                                                                \
        explicit Type(const std::string &what) : Error(#Type, what) {}    \
    };

    LIGHTPOINT_DEFINE_ERROR(InvalidArgument)
    LIGHTPOINT_DEFINE_ERROR(DepthOutOfRange)
    LIGHTPOINT_DEFINE_ERROR(InvalidLayerCount)
    LIGHTPOINT_DEFINE_ERROR(NoCriticalAngle)
    LIGHTPOINT_DEFINE_ERROR(DegenerateAngle)
    LIGHTPOINT_DEFINE_ERROR(NoEigenray)
    LIGHTPOINT_DEFINE_ERROR(DimensionMismatch)
    LIGHTPOINT_DEFINE_ERROR(EmptyMap)
    LIGHTPOINT_DEFINE_ERROR(InsufficientPaths)
    LIGHTPOINT_DEFINE_ERROR(Infeasible)
    LIGHTPOINT_DEFINE_ERROR(ParseError)
    LIGHTPOINT_DEFINE_ERROR(ValidationError)

#undef LIGHTPOINT_DEFINE_ERROR
}

#endif
