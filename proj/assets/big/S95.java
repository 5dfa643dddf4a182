class S95 extends Abstract2 {
  void enter() {
    new S68();
    send("msg15");
    if (x1 > 0) {
      if (x9 > 0) {
        new S8();
        send("msg4");
        new S83();
      }
      new S90();
      new S25();
    } else {
      switch (event) {
        case EV2884:
          send("msg19");
          new S26();
          break;
        case EV2885:
          new S77();
          break;
        case EV2886:
          send("msg1");
          switch (event) {
            case EV2887:
              new S13();
              send("msg14");
              send("msg17");
              break;
            case EV2888:
              send("msg1");
              new S34();
              new S74();
              new S56();
              break;
          }
          switch (event) {
            case EV2889:
              send("msg16");
              new S100();
              new S5();
              log("note");
              break;
            case EV2890:
              send("msg17");
              send("msg6");
              log("note");
              send("msg0");
              break;
            case EV2891:
              send("msg10");
              send("msg15");
              new S4();
              break;
          }
          new S68();
          break;
      }
      if (x1 > 0) {
        new Helper();
      }
      send("msg18");
      switch (event) {
        case EV2892:
          new S88();
          switch (event) {
            case EV2893:
              send("msg15");
              break;
          }
          new S61();
          try {
            send("msg16");
            new S9();
          } catch (TimeoutException e) {
            send("msg17");
            new S81();
          } finally {
            new S70();
            new S85();
            new S15();
            send("msg3");
          }
          break;
        case EV2894:
          send("msg14");
          try {
            new S35();
            new S93();
            send("msg13");
          } catch (IllegalStateException e) {
            send("msg15");
            send("msg14");
          }
          break;
        case EV2895:
          try {
            new S61();
            send("msg15");
          } catch (TimeoutException e) {
            send("msg2");
            send("msg16");
            new S70();
          } catch (IOException e) {
            send("msg19");
          }
          send("msg11");
          new S89();
          break;
      }
    }
  }
  public void exit() {
    new S60();
    if (x5 > 0) {
      send("msg13");
      send("msg9");
      switch (event) {
        case EV2896:
          try {
            new S44();
            new State();
            send("msg6");
          } catch (IllegalStateException e) {
            new S67();
            send("msg8");
            send("msg3");
            new S7();
          }
          break;
        case EV2897:
          log("note");
          switch (event) {
            case EV2898:
              new S35();
              break;
          }
          if (x6 > 0) {
            new S96();
            new S67();
          }
          break;
      }
      new S27();
    } else {
      try {
        new S29();
        log("note");
        switch (event) {
          case EV2899:
            send("msg9");
            new Helper();
            send("msg12");
            break;
        }
      } catch (IllegalStateException e) {
        send("msg0");
        new S54();
      }
    }
  }
  void handle() {
    new S42();
    new S85();
    new S12();
    new S42();
  }
  public void tick() {
    if (x1 > 0) {
      new S22();
      log("note");
      send("msg3");
    } else {
      if (x4 > 0) {
        if (x8 > 0) {
          new S95();
          new S47();
        } else {
          send("msg6");
          new S18();
        }
      } else {
        send("msg12");
        if (x9 > 0) {
          new S93();
          new S19();
          send("msg18");
        }
      }
      send("msg2");
      try {
        new S3();
        send("msg9");
      } catch (IOException e) {
        try {
          new S1();
          send("msg9");
          new S39();
          log("note");
        } finally {
          log("note");
          new S44();
          log("note");
          new S78();
        }
        send("msg8");
      }
    }
    if (x9 > 0) {
      try {
        new S11();
      } catch (TimeoutException e) {
        new S98();
        send("msg14");
      } catch (IOException e) {
        log("note");
        log("note");
        try {
          log("note");
        } catch (TimeoutException e) {
          new Helper();
          send("msg4");
          new S50();
          new S37();
        } catch (TimeoutException e) {
          send("msg13");
          send("msg11");
          new S97();
          new S75();
        }
      }
      new S88();
      switch (event) {
        case EV2900:
          send("msg14");
          switch (event) {
            case EV2901:
              new S46();
              new S41();
              new S11();
              break;
            case EV2902:
              new Helper();
              break;
          }
          break;
        case EV2903:
          if (x3 > 0) {
            new S65();
          } else {
            new S84();
            new S2();
          }
          new S6();
          new S64();
          break;
      }
    }
    try {
      new S23();
    } catch (IllegalStateException e) {
      new S90();
      if (x1 > 0) {
        new S72();
        new S89();
        send("msg7");
      }
      new S29();
    } catch (IOException e) {
      if (x3 > 0) {
        if (x3 > 0) {
          new S94();
        } else {
          new S6();
        }
        new S69();
      } else {
        if (x4 > 0) {
          send("msg14");
          send("msg16");
        } else {
          new S67();
          send("msg14");
          send("msg6");
        }
        switch (event) {
          case EV2904:
            new S79();
            send("msg9");
            break;
          case EV2905:
            new S2();
            send("msg4");
            send("msg2");
            break;
        }
        new S42();
        log("note");
      }
    }
  }
  void reset() {
    log("note");
    try {
      new S88();
    } catch (TimeoutException e) {
      try {
        switch (event) {
          case EV2906:
            new S65();
            break;
          case EV2907:
            send("msg16");
            break;
          case EV2908:
            new S57();
            log("note");
            send("msg2");
            break;
        }
      } finally {
        send("msg1");
        new S42();
        new S79();
      }
      new S67();
      if (x1 > 0) {
        send("msg14");
        try {
          new S23();
          new S4();
          new S34();
        } finally {
          new S24();
          send("msg2");
          new S34();
        }
        new Helper();
      }
    } catch (TimeoutException e) {
      if (x2 > 0) {
        new S84();
        if (x0 > 0) {
          new S55();
          new S18();
          send("msg16");
          log("note");
        }
      } else {
        try {
          send("msg18");
        } finally {
          new S84();
          new S2();
        }
        if (x6 > 0) {
          new S14();
          new S47();
          new S54();
        }
        send("msg14");
      }
      new S40();
    }
    send("msg11");
    send("msg9");
  }
  void open() {
    if (x4 > 0) {
      switch (event) {
        case EV2909:
          send("msg17");
          try {
            new S59();
            new S2();
            log("note");
            new S16();
          } catch (IllegalStateException e) {
            new S14();
            new S20();
            new S10();
            send("msg1");
          }
          break;
        case EV2910:
          try {
            new S53();
            send("msg11");
            send("msg14");
            log("note");
          } catch (TimeoutException e) {
            new S82();
            new Helper();
          } catch (TimeoutException e) {
            new S100();
          }
          break;
      }
      new S6();
      switch (event) {
        case EV2911:
          log("note");
          break;
      }
    }
    new S71();
    log("note");
    new Helper();
  }
  public void close() {
    try {
      try {
        log("note");
        new S26();
        new S50();
        switch (event) {
          case EV2912:
            send("msg3");
            log("note");
            break;
          case EV2913:
            send("msg19");
            new S80();
            break;
        }
      } finally {
        new Helper();
      }
    } finally {
      new S46();
    }
    switch (event) {
      case EV2914:
        new S25();
        break;
      case EV2915:
        try {
          new S48();
          new Helper();
        } catch (IOException e) {
          new S17();
          send("msg10");
          try {
            send("msg3");
            new S53();
            send("msg2");
            send("msg3");
          } catch (IOException e) {
            new S34();
            new Helper();
            new S35();
            new S37();
          } catch (TimeoutException e) {
            new S11();
            new S46();
            log("note");
          }
        } finally {
          try {
            new S78();
          } catch (IllegalStateException e) {
            new S94();
          }
          switch (event) {
            case EV2916:
              send("msg17");
              send("msg5");
              send("msg15");
              new S79();
              break;
            case EV2917:
              new S66();
              send("msg2");
              break;
            case EV2918:
              new S20();
              send("msg6");
              break;
          }
          new S18();
          switch (event) {
            case EV2919:
              log("note");
              break;
            case EV2920:
              send("msg6");
              break;
          }
        }
        send("msg17");
        break;
    }
    if (x5 > 0) {
      if (x3 > 0) {
        if (x0 > 0) {
          log("note");
          new S44();
          new S28();
          send("msg5");
        }
        send("msg1");
      }
      switch (event) {
        case EV2921:
          if (x2 > 0) {
            send("msg7");
            send("msg11");
            new S43();
          }
          new S7();
          send("msg13");
          send("msg6");
          break;
        case EV2922:
          send("msg14");
          send("msg7");
          log("note");
          break;
        case EV2923:
          switch (event) {
            case EV2924:
              new S95();
              new S13();
              new S5();
              send("msg8");
              break;
            case EV2925:
              send("msg14");
              new S36();
              send("msg7");
              new S38();
              break;
          }
          switch (event) {
            case EV2926:
              new S60();
              break;
            case EV2927:
              log("note");
              send("msg14");
              break;
          }
          break;
      }
      if (x2 > 0) {
        new S4();
        if (x8 > 0) {
          new S87();
          send("msg18");
        } else {
          new S100();
          new S15();
          send("msg4");
        }
        try {
          new Helper();
          new S97();
          send("msg9");
        } finally {
          new S11();
        }
      } else {
        send("msg15");
        new S76();
        switch (event) {
          case EV2928:
            new S22();
            send("msg14");
            send("msg1");
            new State();
            break;
          case EV2929:
            new S83();
            break;
          case EV2930:
            log("note");
            new S18();
            send("msg7");
            new S64();
            break;
        }
        if (x1 > 0) {
          new S19();
        } else {
          send("msg1");
          new S14();
          send("msg9");
          new S49();
        }
      }
      send("msg12");
    } else {
      switch (event) {
        case EV2931:
          send("msg0");
          send("msg11");
          new S37();
          send("msg2");
          break;
        case EV2932:
          log("note");
          send("msg8");
          break;
      }
    }
    new S69();
  }
  void start() {
    new S6();
    try {
      log("note");
      send("msg14");
      new S93();
    } finally {
      send("msg15");
      switch (event) {
        case EV2933:
          send("msg14");
          if (x4 > 0) {
            log("note");
            new S63();
          }
          send("msg19");
          try {
            new S74();
            send("msg8");
            log("note");
          } finally {
            new S89();
            new Helper();
          }
          break;
        case EV2934:
          try {
            send("msg9");
            new S67();
          } catch (IOException e) {
            new S23();
            new S53();
            new S2();
            log("note");
          } catch (IOException e) {
            send("msg10");
            new S23();
            send("msg18");
          }
          send("msg18");
          new S49();
          break;
        case EV2935:
          new S80();
          try {
            new S54();
          } catch (TimeoutException e) {
            log("note");
            send("msg17");
          }
          break;
      }
      log("note");
    }
  }
  void stop() {
    send("msg3");
    try {
      new S95();
    } catch (IOException e) {
      try {
        send("msg9");
        new S86();
        new S90();
      } catch (IOException e) {
        send("msg7");
        new S70();
        new S44();
        log("note");
      }
      switch (event) {
        case EV2936:
          try {
            new S47();
            new S59();
            send("msg4");
            new S60();
          } catch (IllegalStateException e) {
            new S37();
            new State();
            log("note");
          } catch (TimeoutException e) {
            send("msg15");
            new S47();
            new S18();
          }
          send("msg17");
          new S14();
          break;
        case EV2937:
          if (x2 > 0) {
            send("msg0");
            new S71();
            new S76();
          } else {
            send("msg2");
            new S19();
            send("msg6");
            new S89();
          }
          new S81();
          send("msg17");
          new S55();
          break;
        case EV2938:
          try {
            send("msg6");
            new S89();
          } catch (TimeoutException e) {
            new S33();
          }
          break;
      }
      send("msg5");
      new S77();
    }
    send("msg15");
  }
  void pause() {
    try {
      send("msg0");
    } catch (TimeoutException e) {
      switch (event) {
        case EV2939:
          switch (event) {
            case EV2940:
              new S40();
              log("note");
              break;
            case EV2941:
              new S75();
              new State();
              break;
            case EV2942:
              send("msg17");
              log("note");
              break;
          }
          switch (event) {
            case EV2943:
              new S74();
              log("note");
              break;
            case EV2944:
              new S46();
              send("msg19");
              break;
            case EV2945:
              new S32();
              new S41();
              send("msg9");
              break;
          }
          log("note");
          try {
            new Helper();
            new S52();
            new S32();
            new S74();
          } finally {
            send("msg15");
            new S79();
            log("note");
            new State();
          }
          break;
        case EV2946:
          send("msg15");
          try {
            new Helper();
            send("msg16");
          } catch (IllegalStateException e) {
            new State();
            send("msg6");
          } catch (TimeoutException e) {
            new S44();
            send("msg7");
          }
          new S24();
          break;
      }
      new S89();
    } finally {
      send("msg9");
    }
  }
}
