abstract class Abstract16 extends Abstract8 {
}
