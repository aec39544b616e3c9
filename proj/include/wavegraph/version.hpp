#pragma once

#define WAVEGRAPH_VERSION "0.1.0"
