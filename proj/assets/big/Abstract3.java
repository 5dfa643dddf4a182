abstract class Abstract3 extends Abstract1 {
}
