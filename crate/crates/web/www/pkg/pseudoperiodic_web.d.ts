/* tslint:disable */
/* eslint-disable */

export class LongestResult {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly finite: boolean;
    readonly length: number;
    readonly nodes: number;
    readonly summary: string;
    readonly witness: string;
}

export class PrefixCheck {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    /**
     * Positions compared at the violation: `i` and `i + p` for each entry.
     */
    readonly highlight: Uint32Array;
    readonly label: string;
    /**
     * First position where the tuple fails, if any.
     */
    readonly violation: number | undefined;
    /**
     * The prefix as digits.
     */
    readonly word: string;
}

export function check_prefix(name: string, len: number, tuple: string): PrefixCheck;

export function longest(pp: string, exponent: string, alphabet: number): LongestResult;

export function triple_grid(a: number, size: number): Uint8Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_longestresult_free: (a: number, b: number) => void;
    readonly __wbg_prefixcheck_free: (a: number, b: number) => void;
    readonly check_prefix: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly longest: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly longestresult_finite: (a: number) => number;
    readonly longestresult_length: (a: number) => number;
    readonly longestresult_nodes: (a: number) => number;
    readonly longestresult_summary: (a: number) => [number, number];
    readonly longestresult_witness: (a: number) => [number, number];
    readonly prefixcheck_highlight: (a: number) => [number, number];
    readonly prefixcheck_label: (a: number) => [number, number];
    readonly prefixcheck_violation: (a: number) => number;
    readonly prefixcheck_word: (a: number) => [number, number];
    readonly triple_grid: (a: number, b: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
