/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_longestresult_free: (a: number, b: number) => void;
export const __wbg_prefixcheck_free: (a: number, b: number) => void;
export const check_prefix: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const longest: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const longestresult_finite: (a: number) => number;
export const longestresult_length: (a: number) => number;
export const longestresult_nodes: (a: number) => number;
export const longestresult_summary: (a: number) => [number, number];
export const longestresult_witness: (a: number) => [number, number];
export const prefixcheck_highlight: (a: number) => [number, number];
export const prefixcheck_label: (a: number) => [number, number];
export const prefixcheck_violation: (a: number) => number;
export const prefixcheck_word: (a: number) => [number, number];
export const triple_grid: (a: number, b: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
